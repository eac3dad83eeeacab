#include "mppinav/rollout_kernel.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mppinav {
namespace {

struct ChannelScales {
  std::array<double, 4> sigma;    // standard deviations
  std::array<double, 4> r;        // R diagonal
  double half_one_minus_inv_nu;   // (1 - 1/nu) / 2
};

// Cost and dynamics for one rollout; writes its noise strip and returns the
// cost-to-go. Must stay a pure function of (prob, k) for schedule-independent
// parallel execution.
double single_rollout(const RolloutProblem& prob, const ChannelScales& s,
                      int k, double* noise_strip) {
  using kernel_detail::channel_draw;
  using kernel_detail::step_key;

  const ControlSequence& nominal = *prob.nominal;
  const VoxelGrid& map = *prob.map;
  const int horizon = nominal.horizon();
  const std::uint64_t rk = kernel_detail::rollout_key(prob.noise_key, k);

  State x = prob.initial_state;
  double cost_to_go = 0.0;

  for (int t = 0; t < horizon; ++t) {
    const std::uint64_t sk = step_key(rk, t);
    double du[4];
    for (int c = 0; c < 4; ++c) {
      du[c] = s.sigma[c] * channel_draw(sk, c);
      noise_strip[4 * t + c] = du[c];
    }

    const ControlInput& u = nominal[t];
    const Vector3d tau(u.torque.x() + du[1], u.torque.y() + du[2],
                       u.torque.z() + du[3]);
    x = detail::guarded_step(x, u.thrust + du[0], tau, prob.dt, prob.model);

    // Modified running cost: state cost at the reached state plus the
    // control-dependent terms.
    double q = running_state_cost(x, prob.goal, prob.cost, map);
    double u_r_u = s.r[0] * u.thrust * u.thrust;
    double du_r_du = s.r[0] * du[0] * du[0];
    double u_r_du = s.r[0] * u.thrust * du[0];
    for (int c = 1; c < 4; ++c) {
      const double uc = u.torque[c - 1];
      u_r_u += s.r[c] * uc * uc;
      du_r_du += s.r[c] * du[c] * du[c];
      u_r_du += s.r[c] * uc * du[c];
    }
    cost_to_go += q + 0.5 * u_r_u + s.half_one_minus_inv_nu * du_r_du + u_r_du;
  }

  cost_to_go += terminal_cost(x, prob.goal, prob.cost, map);
  return cost_to_go;
}

ChannelScales make_scales(const RolloutProblem& prob) {
  ChannelScales s;
  for (int c = 0; c < 4; ++c) {
    s.sigma[c] = std::sqrt(prob.sigma_u[c]);
    s.r[c] = prob.r_diag[c];
  }
  s.half_one_minus_inv_nu = 0.5 * (1.0 - 1.0 / prob.nu);
  return s;
}

}  // namespace

void sample_noise(int rollouts, int horizon, const std::array<double, 4>& sigma_u,
                  std::uint64_t noise_key, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(rollouts) * horizon * 4);
  std::array<double, 4> sigma;
  for (int c = 0; c < 4; ++c) sigma[c] = std::sqrt(sigma_u[c]);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int k = 0; k < rollouts; ++k) {
    const std::uint64_t rk = kernel_detail::rollout_key(noise_key, k);
    double* strip = out.data() + static_cast<std::size_t>(k) * horizon * 4;
    for (int t = 0; t < horizon; ++t) {
      const std::uint64_t sk = kernel_detail::step_key(rk, t);
      for (int c = 0; c < 4; ++c) {
        strip[4 * t + c] = sigma[c] * kernel_detail::channel_draw(sk, c);
      }
    }
  }
}

void cost_rollouts_serial(const RolloutProblem& prob, RolloutBatch& batch) {
  const int horizon = prob.nominal->horizon();
  batch.resize(prob.rollouts, horizon);
  const ChannelScales s = make_scales(prob);
  for (int k = 0; k < batch.rollouts; ++k) {
    double* strip = batch.noise.data() + static_cast<std::size_t>(k) * horizon * 4;
    batch.costs[static_cast<std::size_t>(k)] = single_rollout(prob, s, k, strip);
  }
}

void cost_rollouts_parallel(const RolloutProblem& prob, RolloutBatch& batch,
                            int workers) {
  const int horizon = prob.nominal->horizon();
  batch.resize(prob.rollouts, horizon);
  const ChannelScales s = make_scales(prob);
#ifdef _OPENMP
  const int n = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(n)
#endif
  for (int k = 0; k < batch.rollouts; ++k) {
    double* strip = batch.noise.data() + static_cast<std::size_t>(k) * horizon * 4;
    batch.costs[static_cast<std::size_t>(k)] = single_rollout(prob, s, k, strip);
  }
}

}  // namespace mppinav
