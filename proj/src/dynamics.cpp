#include "mppinav/dynamics.hpp"

#include <cmath>

#include "mppinav/rng.hpp"

namespace mppinav {

Matrix3d rotation_matrix(const Vector3d& euler) {
  const double sph = std::sin(euler.x()), cph = std::cos(euler.x());
  const double sth = std::sin(euler.y()), cth = std::cos(euler.y());
  const double sps = std::sin(euler.z()), cps = std::cos(euler.z());
  Matrix3d r;
  r << cps * cth - sph * sps * sth, -cph * sps, cps * sth + cth * sph * sps,
       cth * sps + cps * sph * sth,  cph * cps, sps * sth - cps * cth * sph,
       -cph * sth,                   sph,       cph * cth;
  return r;
}

Matrix3d euler_rate_transform(const Vector3d& euler) {
  const double sph = std::sin(euler.x()), cph = std::cos(euler.x());
  const double sth = std::sin(euler.y()), cth = std::cos(euler.y());
  Matrix3d t;
  t << cth, 0, -cph * sth,
       0,   1, sph,
       sth, 0, cph * cth;
  return t;
}

State continuous_dynamics(const State& x, const ControlInput& u,
                          const VehicleParams& p) {
  State dx;
  if (!detail::derivative(x, u.thrust, u.torque, p, dx)) {
    throw SingularAttitudeError("euler-rate transform singular: |cos(roll)| < 1e-6");
  }
  return dx;
}

State step(const State& x, const ControlInput& u, double dt,
           const VehicleParams& p) {
  const State dx = continuous_dynamics(x, u, p);
  State out;
  out.position = x.position + dx.position * dt;
  out.euler = x.euler + dx.euler * dt;
  out.velocity = x.velocity + dx.velocity * dt;
  out.body_rates = x.body_rates + dx.body_rates * dt;
  return out;
}

RotorSpeeds control_to_rotor_speeds(const ControlInput& u, const VehicleParams& p) {
  // Solve the 4x4 mixing system for the squared speeds.
  const double a = u.thrust / p.k_f;                       // s1+s2+s3+s4
  const double b = u.torque.x() / (p.k_f * p.arm_length);  // s2-s4
  const double c = u.torque.y() / (p.k_f * p.arm_length);  // s3-s1
  const double d = u.torque.z() / p.k_m;                   // s1-s2+s3-s4
  Vector4d sq;
  sq[0] = 0.5 * (0.5 * (a + d) - c);
  sq[1] = 0.5 * (0.5 * (a - d) + b);
  sq[2] = 0.5 * (0.5 * (a + d) + c);
  sq[3] = 0.5 * (0.5 * (a - d) - b);
  RotorSpeeds w;
  for (int i = 0; i < 4; ++i) {
    if (sq[i] < 0.0) {
      throw InfeasibleControlError("control maps to negative squared rotor speed");
    }
    w.omega[i] = std::sqrt(sq[i]);
  }
  return w;
}

ControlInput rotor_speeds_to_control(const RotorSpeeds& w, const VehicleParams& p) {
  const Vector4d sq = w.omega.array().square();
  ControlInput u;
  u.thrust = p.k_f * sq.sum();
  u.torque.x() = p.k_f * p.arm_length * (sq[1] - sq[3]);
  u.torque.y() = p.k_f * p.arm_length * (sq[2] - sq[0]);
  u.torque.z() = p.k_m * (sq[0] - sq[1] + sq[2] - sq[3]);
  return u;
}

VehicleParams perturb_params(const VehicleParams& p, double fraction,
                             std::uint64_t seed) {
  VehicleParams out = p;
  const std::uint64_t key = rng::mix(seed);
  const auto factor = [&](int i) {
    return rng::uniform(rng::fold(key, i, 0x70b5), 1.0 - fraction, 1.0 + fraction);
  };
  out.mass *= factor(0);
  out.inertia.x() *= factor(1);
  out.inertia.y() *= factor(2);
  out.inertia.z() *= factor(3);
  return out;
}

}  // namespace mppinav
