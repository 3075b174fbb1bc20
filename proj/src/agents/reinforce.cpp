#include "mktsim/agents/reinforce.hpp"

#include <cmath>

#include "mktsim/util/errors.hpp"
#include "mktsim/util/log.hpp"

namespace mktsim {

void ReinforceConfig::validate() const {
  if (!(gamma > 0.0) || !(gamma < 1.0)) throw ConfigError("gamma must be in (0,1)");
  if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be > 0");
  if (episodes_per_update < 1) throw ConfigError("episodes_per_update must be >= 1");
  if (total_updates < 1) throw ConfigError("total_updates must be >= 1");
  if (!(sigma_start > 0.0) || !(sigma_end > 0.0)) {
    throw ConfigError("exploration sigma must stay positive during training");
  }
  if (rollout_workers < 1) throw ConfigError("rollout_workers must be >= 1");
}

std::vector<double> discounted_returns(const std::vector<double>& rewards, double gamma) {
  std::vector<double> g(rewards.size());
  double acc = 0.0;
  for (std::size_t i = rewards.size(); i-- > 0;) {
    acc = rewards[i] + gamma * acc;
    g[i] = acc;
  }
  return g;
}

double baseline_value(const std::vector<Trajectory>& batch, double gamma, BaselineKind kind) {
  if (kind == BaselineKind::None) return 0.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& traj : batch) {
    std::vector<double> rewards;
    rewards.reserve(traj.transitions.size());
    for (const auto& tr : traj.transitions) rewards.push_back(tr.reward);
    for (double g : discounted_returns(rewards, gamma)) {
      sum += g;
      ++count;
    }
  }
  return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

namespace {

// Shared walk over the batch: calls fn(advantage, deviation a - u, x_hat)
// once per transition.
template <typename Fn>
void for_each_weighted_step(const LinearPolicy& policy, const std::vector<Trajectory>& batch,
                            double gamma, double baseline, Fn&& fn) {
  for (const auto& traj : batch) {
    std::vector<double> rewards;
    rewards.reserve(traj.transitions.size());
    for (const auto& tr : traj.transitions) rewards.push_back(tr.reward);
    std::vector<double> g = discounted_returns(rewards, gamma);
    for (std::size_t t = 0; t < traj.transitions.size(); ++t) {
      const auto& tr = traj.transitions[t];
      Eigen::VectorXd x = policy.normalizer().normalize(tr.observation);
      Eigen::VectorXd u = policy.weights() * x + policy.bias();
      Eigen::Map<const Eigen::VectorXd> a(tr.action.data(),
                                          static_cast<Eigen::Index>(tr.action.size()));
      fn(g[t] - baseline, Eigen::VectorXd(a - u), x);
    }
  }
}

}  // namespace

double reinforce_objective(const LinearPolicy& policy, const std::vector<Trajectory>& batch,
                           double gamma, double baseline) {
  const double inv_var = 1.0 / (policy.sigma() * policy.sigma());
  double j = 0.0;
  for_each_weighted_step(policy, batch, gamma, baseline,
                         [&](double adv, const Eigen::VectorXd& dev, const Eigen::VectorXd&) {
                           j += adv * (-0.5 * inv_var * dev.squaredNorm());
                         });
  return j / static_cast<double>(batch.size());
}

PolicyGradient reinforce_gradient(const LinearPolicy& policy,
                                  const std::vector<Trajectory>& batch, double gamma,
                                  double baseline) {
  const double inv_var = 1.0 / (policy.sigma() * policy.sigma());
  PolicyGradient grad{Eigen::MatrixXd::Zero(policy.weights().rows(), policy.weights().cols()),
                      Eigen::VectorXd::Zero(policy.bias().size())};
  for_each_weighted_step(policy, batch, gamma, baseline,
                         [&](double adv, const Eigen::VectorXd& dev, const Eigen::VectorXd& x) {
                           Eigen::VectorXd du = adv * inv_var * dev;
                           grad.d_weights.noalias() += du * x.transpose();
                           grad.d_bias += du;
                         });
  grad.d_weights /= static_cast<double>(batch.size());
  grad.d_bias /= static_cast<double>(batch.size());
  return grad;
}

TrainResult train_reinforce(const EnvFactory& env_factory, LinearPolicy policy,
                            const ReinforceConfig& cfg) {
  cfg.validate();
  const std::size_t episodes = static_cast<std::size_t>(cfg.episodes_per_update);
  std::vector<EnvFactory> factories(episodes, env_factory);

  TrainResult result{std::move(policy), {}};
  result.learning_curve.reserve(static_cast<std::size_t>(cfg.total_updates));

  for (int update = 0; update < cfg.total_updates; ++update) {
    double frac = cfg.total_updates > 1
                      ? static_cast<double>(update) / static_cast<double>(cfg.total_updates - 1)
                      : 0.0;
    result.policy.set_sigma(cfg.sigma_start + (cfg.sigma_end - cfg.sigma_start) * frac);

    WorkerPoolConfig pool{cfg.rollout_workers,
                          cfg.seed + 1000003ULL * static_cast<std::uint64_t>(update)};
    RolloutBatch batch = run_batch(factories, result.policy, /*steps_per_env=*/
                                   std::numeric_limits<std::size_t>::max(), pool);

    double baseline = baseline_value(batch.trajectories, cfg.gamma, cfg.baseline);
    PolicyGradient grad =
        reinforce_gradient(result.policy, batch.trajectories, cfg.gamma, baseline);
    result.policy.weights() += cfg.learning_rate * grad.d_weights;
    result.policy.bias() += cfg.learning_rate * grad.d_bias;
    if (!result.policy.finite_parameters()) {
      throw RuntimeFault("training diverged: non-finite parameters at update " +
                         std::to_string(update));
    }

    // Normalizer refresh after the update, in canonical trajectory order.
    for (const auto& traj : batch.trajectories) {
      for (const auto& tr : traj.transitions) result.policy.normalizer().update(tr.observation);
    }

    double mean_reward = 0.0;
    for (const auto& traj : batch.trajectories) mean_reward += traj.total_reward();
    mean_reward /= static_cast<double>(batch.trajectories.size());
    result.learning_curve.push_back(mean_reward);
    log::debug("update " + std::to_string(update) + ": mean episode reward " +
               std::to_string(mean_reward));
  }
  return result;
}

}  // namespace mktsim
