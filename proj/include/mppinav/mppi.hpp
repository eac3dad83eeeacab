#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mppinav/control_sequence.hpp"
#include "mppinav/cost.hpp"
#include "mppinav/rollout_kernel.hpp"
#include "mppinav/sg_filter.hpp"

namespace mppinav {

// Optimizer hyper-parameters. Defaults reproduce the Hummingbird setup:
// K=2700 rollouts over a 3 s horizon at 50 Hz, lambda=0.02, nu=1000 and
// R = lambda * inv(Sigma_u) (the R/Sigma_u coupling is not enforced).
struct MppiConfig {
  int rollouts = 2700;
  int horizon = 150;
  double dt = 0.02;
  double lambda = 0.02;
  double nu = 1000.0;
  std::array<double, 4> sigma_u{2.5, 5e-3, 5e-3, 5e-3};
  std::array<double, 4> r_diag{8e-3, 4.0, 4.0, 4.0};
  int sg_window = 51;
  int sg_order = 3;
  double thrust_min = 0.0;
  double thrust_max = std::numeric_limits<double>::infinity();
  int workers = 0;  // <= 0: all hardware threads
};

// Violated invariants, one message each; empty when the config is valid.
std::vector<std::string> validate(const MppiConfig& cfg);

// exp(-(S_k - S_min)/lambda), normalized to sum to one.
std::vector<double> softmax_weights(std::span<const double> costs, double lambda);

double weight_entropy(std::span<const double> weights);

// Per time step: u_t += sum_k w_k * du_{t,k} with softmax weights from the
// batch costs.
void update_control_sequence(ControlSequence& u, const RolloutBatch& batch,
                             double lambda);

// Same with precomputed weights.
void update_with_weights(ControlSequence& u, const RolloutBatch& batch,
                         std::span<const double> weights);

// Receding-horizon shift: drop the executed head, append init at the tail.
ControlSequence shift_sequence(const ControlSequence& u, const ControlInput& init);

struct StepDiagnostics {
  int step_index = 0;
  double min_cost = 0;
  double mean_cost = 0;
  double weight_entropy = 0;
  double t_mppi_ms = 0;
};

// One full optimizer: sample -> cost in parallel -> weighted update ->
// Savitzky-Golay smoothing -> clamp -> shift. Deterministic for fixed
// (state, map, goal, seed) regardless of worker count.
class MppiController {
 public:
  MppiController(const MppiConfig& cfg, const VehicleParams& model,
                 const CostParams& cost, std::uint64_t seed);

  // Hover feed-forward used for warm starts and the shifted tail slot.
  ControlInput hover_control() const { return {model_.hover_thrust(), Vector3d::Zero()}; }

  void reset();

  ControlInput control_step(const State& x0, const VoxelGrid& map,
                            const GoalSpec& goal, StepDiagnostics* diag = nullptr);

  const ControlSequence& sequence() const { return seq_; }
  const MppiConfig& config() const { return cfg_; }
  const VehicleParams& model() const { return model_; }
  int iterations() const { return iteration_; }

 private:
  MppiConfig cfg_;
  VehicleParams model_;
  CostParams cost_;
  std::uint64_t seed_;
  int iteration_ = 0;
  ControlSequence seq_;
  RolloutBatch batch_;
  std::vector<double> sg_weights_;
};

}  // namespace mppinav
