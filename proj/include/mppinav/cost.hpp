#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>

#include "mppinav/dynamics.hpp"
#include "mppinav/voxel_grid.hpp"

namespace mppinav {

// Navigation target: a position plus the yaw that points the front camera
// at the next goal.
struct GoalSpec {
  Vector3d position{0, 0, 0};
  double yaw = 0.0;
};

enum class TerminalCostPolicy { RunningCost, Zero };

// State-dependent running cost
//   q(x) = (x - x_des)' Q (x - x_des) + w1*C1 + w2*C2
// with C1 the collision indicator and C2 the velocity/attitude/ceiling
// limit indicator.
struct CostParams {
  std::array<double, 12> q_diag{2.5, 2.5, 5, 1, 1, 50, 0, 0, 0, 0, 0, 0};
  double collision_weight = 1e8;   // w1
  double limit_weight = 1e5;       // w2
  double v_max = 1.5;              // [m/s]
  double attitude_floor = 0.1;     // C2 fires when |cos(roll/pitch)| drops below
  double ceiling_z = 8.5;          // [m]
  double inflation_radius = 0.0;   // optional horizontal body inflation for C1
  TerminalCostPolicy terminal = TerminalCostPolicy::RunningCost;
};

// Position/attitude weights as a function of the configured speed limit.
std::array<double, 12> q_table(double v_max);

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * M_PI;
  double r = a - two_pi * std::nearbyint(a * (1.0 / two_pi));
  if (r <= -M_PI) r += two_pi;
  return r;
}

// C1: ground or obstacle collision. Only cells with value 1 trigger;
// Unknown is optimistically treated as free.
inline bool collision_indicator(const State& x, const VoxelGrid& map,
                                double inflation_radius = 0.0) {
  if (x.position.z() < 0.0) return true;
  if (map.is_occupied(x.position) == Cell::Occupied) return true;
  if (inflation_radius > 0.0) {
    const double d = inflation_radius;
    if (map.is_occupied(x.position + Vector3d(d, 0, 0)) == Cell::Occupied ||
        map.is_occupied(x.position - Vector3d(d, 0, 0)) == Cell::Occupied ||
        map.is_occupied(x.position + Vector3d(0, d, 0)) == Cell::Occupied ||
        map.is_occupied(x.position - Vector3d(0, d, 0)) == Cell::Occupied) {
      return true;
    }
  }
  return false;
}

// C2: speeding, near-singular roll/pitch, or ceiling violation.
inline bool limit_indicator(const State& x, const CostParams& p) {
  if (x.velocity.squaredNorm() > p.v_max * p.v_max) return true;
  if (std::abs(std::cos(x.euler.x())) < p.attitude_floor) return true;
  if (std::abs(std::cos(x.euler.y())) < p.attitude_floor) return true;
  return x.position.z() > p.ceiling_z;
}

// Quadratic tracking term. The desired state is
// (x_des, y_des, z_des, 0, 0, yaw_des, zeros(1,6)); the yaw residual is
// wrapped to (-pi, pi] before weighting.
inline double tracking_cost(const State& x, const GoalSpec& goal,
                            const CostParams& p) {
  const double ex = x.position.x() - goal.position.x();
  const double ey = x.position.y() - goal.position.y();
  const double ez = x.position.z() - goal.position.z();
  const double epsi = wrap_angle(x.euler.z() - goal.yaw);
  double q = p.q_diag[0] * ex * ex + p.q_diag[1] * ey * ey + p.q_diag[2] * ez * ez;
  q += p.q_diag[3] * x.euler.x() * x.euler.x();
  q += p.q_diag[4] * x.euler.y() * x.euler.y();
  q += p.q_diag[5] * epsi * epsi;
  // Velocity and body-rate weights are zero in both published Q variants but
  // stay configurable.
  if (p.q_diag[6] != 0 || p.q_diag[7] != 0 || p.q_diag[8] != 0) {
    q += p.q_diag[6] * x.velocity.x() * x.velocity.x() +
         p.q_diag[7] * x.velocity.y() * x.velocity.y() +
         p.q_diag[8] * x.velocity.z() * x.velocity.z();
  }
  if (p.q_diag[9] != 0 || p.q_diag[10] != 0 || p.q_diag[11] != 0) {
    q += p.q_diag[9] * x.body_rates.x() * x.body_rates.x() +
         p.q_diag[10] * x.body_rates.y() * x.body_rates.y() +
         p.q_diag[11] * x.body_rates.z() * x.body_rates.z();
  }
  return q;
}

inline double running_state_cost(const State& x, const GoalSpec& goal,
                                 const CostParams& p, const VoxelGrid& map) {
  double q = tracking_cost(x, goal, p);
  if (collision_indicator(x, map, p.inflation_radius)) q += p.collision_weight;
  if (limit_indicator(x, p)) q += p.limit_weight;
  return q;
}

inline double terminal_cost(const State& x, const GoalSpec& goal,
                            const CostParams& p, const VoxelGrid& map) {
  return p.terminal == TerminalCostPolicy::Zero
             ? 0.0
             : running_state_cost(x, goal, p, map);
}

// Yaw that points from current toward goal in the horizontal plane;
// falls back when the horizontal distance is degenerate.
double desired_yaw(const Vector3d& current, const Vector3d& goal,
                   double fallback_yaw);

bool goal_reached(const State& x, const GoalSpec& goal, double tolerance);

}  // namespace mppinav
