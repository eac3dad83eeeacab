#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random streams. Every draw is a pure function of
// (seed, counter...) so rollout workers can evaluate in any order and
// still produce identical values.

namespace mppinav::rng {

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) {
  z += kGamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Folds an index into a key. Distinct multipliers keep nested counters
// (iteration, rollout, step, channel) on distinct streams.
constexpr std::uint64_t fold(std::uint64_t key, std::uint64_t index,
                             std::uint64_t salt) {
  return mix(key ^ (index * 0xd1342543de82ef95ull + salt));
}

// Uniform double in the open interval (0, 1).
constexpr double uniform01(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
constexpr double uniform(std::uint64_t bits, double lo, double hi) {
  return lo + (hi - lo) * uniform01(bits);
}

// Inverse standard-normal CDF, Acklam's rational approximation
// (relative error < 1.2e-9 over (0,1)).
inline double normal_icdf(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Standard normal draw from a counter value.
inline double gaussian(std::uint64_t bits) { return normal_icdf(uniform01(bits)); }

}  // namespace mppinav::rng
