#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "mktsim/agents/linear_policy.hpp"
#include "mktsim/env/env.hpp"
#include "mktsim/env/trajectory.hpp"
#include "mktsim/sim/rollout.hpp"

namespace mktsim {

enum class BaselineKind { None, MeanReturn };

struct ReinforceConfig {
  double gamma = 0.99;          // discount factor
  double learning_rate = 0.05;
  int episodes_per_update = 8;
  int total_updates = 50;
  std::uint64_t seed = 0;
  BaselineKind baseline = BaselineKind::MeanReturn;
  // Exploration noise, annealed linearly from start to end across updates.
  double sigma_start = 0.3;
  double sigma_end = 0.1;
  std::size_t rollout_workers = 1;

  void validate() const;
};

// G_t = sum_k gamma^k r_{t+k}.
std::vector<double> discounted_returns(const std::vector<double>& rewards, double gamma);

struct PolicyGradient {
  Eigen::MatrixXd d_weights;
  Eigen::VectorXd d_bias;
};

// Score-function objective over a fixed batch:
//   J = (1/E) sum_episodes sum_t (G_t - baseline) log pi(a_t | s_t)
// with the Gaussian log-density of the stored actions under the policy's
// current mean (the additive log-normalization constant is dropped; it does
// not depend on the parameters). reinforce_gradient is its exact analytic
// gradient, so central differences of reinforce_objective must match it.
double reinforce_objective(const LinearPolicy& policy,
                           const std::vector<Trajectory>& batch, double gamma,
                           double baseline);
PolicyGradient reinforce_gradient(const LinearPolicy& policy,
                                  const std::vector<Trajectory>& batch, double gamma,
                                  double baseline);

// Mean of all per-timestep returns G_t in the batch (the mean-return
// baseline), or 0 for BaselineKind::None.
double baseline_value(const std::vector<Trajectory>& batch, double gamma, BaselineKind kind);

struct TrainResult {
  LinearPolicy policy;
  std::vector<double> learning_curve;  // mean episode reward per update
};

// REINFORCE with Gaussian exploration over a linear policy. Each update rolls
// out episodes_per_update full episodes (in parallel when rollout_workers >
// 1; results are order-deterministic either way), takes one gradient-ascent
// step, then refreshes the observation normalizer from the batch. Aborts with
// RuntimeFault if parameters stop being finite. Deterministic given cfg.seed.
TrainResult train_reinforce(const EnvFactory& env_factory, LinearPolicy policy,
                            const ReinforceConfig& cfg);

}  // namespace mktsim
