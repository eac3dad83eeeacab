#include "mppinav/cost.hpp"

namespace mppinav {

std::array<double, 12> q_table(double v_max) {
  if (v_max <= 1.5) {
    return {2.5, 2.5, 5, 1, 1, 50, 0, 0, 0, 0, 0, 0};
  }
  return {5, 5, 15, 30, 30, 50, 0, 0, 0, 0, 0, 0};
}

double desired_yaw(const Vector3d& current, const Vector3d& goal,
                   double fallback_yaw) {
  const double dx = goal.x() - current.x();
  const double dy = goal.y() - current.y();
  if (std::hypot(dx, dy) < 1e-6) return fallback_yaw;
  return std::atan2(dy, dx);
}

bool goal_reached(const State& x, const GoalSpec& goal, double tolerance) {
  return (x.position - goal.position).norm() <= tolerance;
}

}  // namespace mppinav
