#pragma once

#include <stdexcept>
#include <string>

namespace mppinav {

// Attitude reached |cos(roll)| below the invertibility guard of the
// Euler-rate transform.
struct SingularAttitudeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested (thrust, torque) cannot be realized with non-negative
// squared rotor speeds.
struct InfeasibleControlError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfBoundsError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct GridMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mppinav
