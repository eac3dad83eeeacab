#pragma once

#include <vector>

#include "mppinav/dynamics.hpp"

namespace mppinav {

// Horizon of control inputs (thrust, tau_x, tau_y, tau_z) indexed by step.
class ControlSequence {
 public:
  ControlSequence() = default;
  explicit ControlSequence(int horizon, ControlInput fill = ControlInput{})
      : u_(static_cast<std::size_t>(horizon), fill) {}

  int horizon() const { return static_cast<int>(u_.size()); }
  ControlInput& operator[](int t) { return u_[static_cast<std::size_t>(t)]; }
  const ControlInput& operator[](int t) const { return u_[static_cast<std::size_t>(t)]; }

  auto begin() { return u_.begin(); }
  auto end() { return u_.end(); }
  auto begin() const { return u_.begin(); }
  auto end() const { return u_.end(); }

  // Channel accessors used by the smoother: 0 = thrust, 1..3 = torque.
  double channel(int t, int c) const {
    const ControlInput& u = u_[static_cast<std::size_t>(t)];
    return c == 0 ? u.thrust : u.torque[c - 1];
  }
  void set_channel(int t, int c, double v) {
    ControlInput& u = u_[static_cast<std::size_t>(t)];
    if (c == 0) {
      u.thrust = v;
    } else {
      u.torque[c - 1] = v;
    }
  }

  friend bool operator==(const ControlSequence& a, const ControlSequence& b) {
    if (a.horizon() != b.horizon()) return false;
    for (int t = 0; t < a.horizon(); ++t) {
      if (a.u_[t].thrust != b.u_[t].thrust || a.u_[t].torque != b.u_[t].torque)
        return false;
    }
    return true;
  }

 private:
  std::vector<ControlInput> u_;
};

}  // namespace mppinav
