#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mppinav/control_sequence.hpp"
#include "mppinav/cost.hpp"
#include "mppinav/dynamics.hpp"
#include "mppinav/rng.hpp"
#include "mppinav/voxel_grid.hpp"

namespace mppinav {

// Sampled perturbations and the resulting per-rollout costs-to-go.
struct RolloutBatch {
  int rollouts = 0;
  int horizon = 0;
  std::vector<double> noise;  // rollouts x horizon x 4, rollout-major
  std::vector<double> costs;  // rollouts

  void resize(int k, int t) {
    rollouts = k;
    horizon = t;
    noise.resize(static_cast<std::size_t>(k) * t * 4);
    costs.resize(static_cast<std::size_t>(k));
  }

  double noise_at(int k, int t, int c) const {
    return noise[(static_cast<std::size_t>(k) * horizon + t) * 4 + c];
  }
};

// Everything a rollout evaluation needs, shared read-only across workers.
struct RolloutProblem {
  State initial_state;
  const ControlSequence* nominal = nullptr;
  const VoxelGrid* map = nullptr;
  GoalSpec goal;
  CostParams cost;
  VehicleParams model;
  int rollouts = 0;
  double dt = 0.02;
  double nu = 1000.0;
  std::array<double, 4> sigma_u{2.5, 5e-3, 5e-3, 5e-3};  // noise variances
  std::array<double, 4> r_diag{8e-3, 4, 4, 4};           // control weight
  std::uint64_t noise_key = 0;  // pre-mixed (seed, iteration)
};

namespace kernel_detail {

inline constexpr std::uint64_t kSaltRollout = 0x524f;
inline constexpr std::uint64_t kSaltStep = 0x5354;

// Gaussian scale factors so each draw is one hash plus one inverse-CDF.
inline std::uint64_t rollout_key(std::uint64_t noise_key, int k) {
  return rng::fold(noise_key, static_cast<std::uint64_t>(k), kSaltRollout);
}
inline std::uint64_t step_key(std::uint64_t rollout_key, int t) {
  return rng::fold(rollout_key, static_cast<std::uint64_t>(t), kSaltStep);
}
inline double channel_draw(std::uint64_t step_key, int c) {
  return rng::gaussian(rng::mix(step_key + static_cast<std::uint64_t>(c)));
}

}  // namespace kernel_detail

// Zero-mean Gaussian control perturbations with per-channel variance
// sigma_u, written rollout-major. Identical to the values the costing
// kernels generate for the same key.
void sample_noise(int rollouts, int horizon, const std::array<double, 4>& sigma_u,
                  std::uint64_t noise_key, std::vector<double>& out);

// Serial reference implementation of batch rollout costing: propagates the
// prediction model under u + du for every rollout and accumulates the
// modified running cost plus the terminal cost. Fills batch.noise and
// batch.costs.
void cost_rollouts_serial(const RolloutProblem& prob, RolloutBatch& batch);

// OpenMP version. Rollouts are independent and every random draw is
// counter-based, so results are bit-identical to the serial reference for
// any worker count. workers <= 0 uses all available threads.
void cost_rollouts_parallel(const RolloutProblem& prob, RolloutBatch& batch,
                            int workers = 0);

}  // namespace mppinav
