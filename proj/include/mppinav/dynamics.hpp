#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "mppinav/errors.hpp"

namespace mppinav {

using Eigen::Matrix3d;
using Eigen::Vector3d;
using Eigen::Vector4d;

// 12-dimensional vehicle state [position, euler angles, velocity, body rates].
// Euler angles are stored unwrapped; nothing here restricts them to the
// invertible range of the rate transform (the cost penalizes, the type permits).
struct State {
  Vector3d position{0, 0, 0};    // [m], world frame
  Vector3d euler{0, 0, 0};       // roll, pitch, yaw [rad], ZXY sequence
  Vector3d velocity{0, 0, 0};    // [m/s], world frame
  Vector3d body_rates{0, 0, 0};  // p, q, r [rad/s], body frame

  bool allFinite() const {
    return position.allFinite() && euler.allFinite() && velocity.allFinite() &&
           body_rates.allFinite();
  }
};

// Collective thrust along body z plus body torques.
struct ControlInput {
  double thrust = 0;           // F [N], >= 0 for realizable inputs
  Vector3d torque{0, 0, 0};    // tau_x, tau_y, tau_z [N m]
};

struct RotorSpeeds {
  Vector4d omega{0, 0, 0, 0};  // per-rotor angular speed, model units, >= 0
};

// Hummingbird-class quadrotor constants.
struct VehicleParams {
  double mass = 0.716;               // [kg]
  double arm_length = 0.17;          // L [m]
  double gravity = 9.81;             // [m/s^2]
  double k_f = 8.55e-6;              // rotor force constant
  double k_m = 1.6e-2;               // rotor moment constant
  Vector3d inertia{7e-3, 7e-3, 12e-3};  // diagonal of J [kg m^2]

  double hover_thrust() const { return mass * gravity; }
};

// Below this |cos(roll)| the Euler-rate transform is treated as singular.
inline constexpr double kAttitudeGuard = 1e-6;

// ZXY rotation matrix from body to world, R = Rz(psi) Rx(phi) Ry(theta).
Matrix3d rotation_matrix(const Vector3d& euler);

// Transform T mapping Euler-angle rates to body rates; det(T) = cos(roll).
Matrix3d euler_rate_transform(const Vector3d& euler);

// Continuous rigid-body dynamics. Throws SingularAttitudeError when
// |cos(roll)| < kAttitudeGuard.
State continuous_dynamics(const State& x, const ControlInput& u,
                          const VehicleParams& p);

// One explicit forward-Euler step: x + f(x, u) * dt.
State step(const State& x, const ControlInput& u, double dt,
           const VehicleParams& p);

// Inverts the rotor mixing map for (F, tau). Throws InfeasibleControlError
// when any squared rotor speed would be negative.
RotorSpeeds control_to_rotor_speeds(const ControlInput& u, const VehicleParams& p);

// Forward rotor mixing map:
//   F     = k_f (w1^2 + w2^2 + w3^2 + w4^2)
//   tau_x = k_f L (w2^2 - w4^2)
//   tau_y = k_f L (w3^2 - w1^2)
//   tau_z = k_m (w1^2 - w2^2 + w3^2 - w4^2)
ControlInput rotor_speeds_to_control(const RotorSpeeds& w, const VehicleParams& p);

// Copy of p with mass and each inertia entry independently scaled by a
// factor uniform in [1 - fraction, 1 + fraction]. Deterministic per seed.
VehicleParams perturb_params(const VehicleParams& p, double fraction,
                             std::uint64_t seed);

namespace detail {

// Dynamics evaluation shared by the public API, the rollout kernel and the
// truth simulator. Near the attitude singularity the derivative is zeroed
// (state freezes) and false is returned; rollouts rely on the cost side to
// price those trajectories out instead of aborting the batch.
inline bool derivative(const State& x, double thrust, const Vector3d& torque,
                       const VehicleParams& p, State& dx) {
  const double sph = std::sin(x.euler.x()), cph = std::cos(x.euler.x());
  const double sth = std::sin(x.euler.y()), cth = std::cos(x.euler.y());
  const double sps = std::sin(x.euler.z()), cps = std::cos(x.euler.z());

  if (std::abs(cph) < kAttitudeGuard) {
    dx = State{Vector3d::Zero(), Vector3d::Zero(), Vector3d::Zero(),
               Vector3d::Zero()};
    return false;
  }

  dx.position = x.velocity;

  // Third column of the ZXY rotation matrix scaled by F/m, minus gravity.
  const double f_over_m = thrust / p.mass;
  dx.velocity.x() = f_over_m * (cps * sth + cth * sph * sps);
  dx.velocity.y() = f_over_m * (sps * sth - cps * cth * sph);
  dx.velocity.z() = f_over_m * (cph * cth) - p.gravity;

  // Closed-form T^-1 applied to the body rates.
  const double pr = x.body_rates.x(), qr = x.body_rates.y(), rr = x.body_rates.z();
  const double inv_cph = 1.0 / cph;
  dx.euler.x() = cth * pr + sth * rr;
  dx.euler.y() = sph * sth * inv_cph * pr + qr - sph * cth * inv_cph * rr;
  dx.euler.z() = (-sth * pr + cth * rr) * inv_cph;

  // J Omega_dot = Gamma - Omega x J Omega with diagonal J.
  const double jx = p.inertia.x(), jy = p.inertia.y(), jz = p.inertia.z();
  dx.body_rates.x() = (torque.x() - qr * rr * (jz - jy)) / jx;
  dx.body_rates.y() = (torque.y() - rr * pr * (jx - jz)) / jy;
  dx.body_rates.z() = (torque.z() - pr * qr * (jy - jx)) / jz;
  return true;
}

// Euler step that freezes instead of throwing at the singularity.
inline State guarded_step(const State& x, double thrust, const Vector3d& torque,
                          double dt, const VehicleParams& p) {
  State dx;
  if (!derivative(x, thrust, torque, p, dx)) return x;
  State out;
  out.position = x.position + dx.position * dt;
  out.euler = x.euler + dx.euler * dt;
  out.velocity = x.velocity + dx.velocity * dt;
  out.body_rates = x.body_rates + dx.body_rates * dt;
  return out;
}

}  // namespace detail
}  // namespace mppinav
