#include "mktsim/agents/baselines.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mktsim/agents/simplex_qp.hpp"
#include "mktsim/util/errors.hpp"

namespace mktsim {

std::vector<double> closes_from_observation(const Observation& obs, std::size_t num_symbols) {
  if (obs.size() < 1 + 2 * num_symbols) throw RuntimeFault("observation too short for closes");
  return {obs.begin() + 1 + static_cast<std::ptrdiff_t>(num_symbols),
          obs.begin() + 1 + static_cast<std::ptrdiff_t>(2 * num_symbols)};
}

Action BuyAndHoldPolicy::act(const Observation&, Rng&) {
  if (first_) {
    first_ = false;
    return Action(n_, 1.0);
  }
  return Action(n_, 0.0);
}

MomentumPolicy::MomentumPolicy(std::size_t num_symbols, int lookback, int top_k)
    : n_(num_symbols), lookback_(lookback), top_k_(top_k) {
  if (lookback < 1) throw ConfigError("momentum lookback must be >= 1");
  if (top_k < 1 || static_cast<std::size_t>(top_k) > num_symbols) {
    throw ConfigError("momentum top_k must be in [1, N]");
  }
}

Action MomentumPolicy::act(const Observation& obs, Rng&) {
  history_.push_back(closes_from_observation(obs, n_));
  if (history_.size() > static_cast<std::size_t>(lookback_) + 1) history_.pop_front();
  if (history_.size() < static_cast<std::size_t>(lookback_) + 1) return Action(n_, 0.0);

  const auto& now = history_.back();
  const auto& then = history_.front();
  std::vector<std::size_t> rank(n_);
  std::iota(rank.begin(), rank.end(), 0);
  std::vector<double> ret(n_);
  for (std::size_t i = 0; i < n_; ++i) ret[i] = now[i] / then[i] - 1.0;
  std::stable_sort(rank.begin(), rank.end(),
                   [&](std::size_t a, std::size_t b) { return ret[a] > ret[b]; });

  Action a(n_, -1.0);
  for (int k = 0; k < top_k_; ++k) a[rank[static_cast<std::size_t>(k)]] = 1.0;
  return a;
}

namespace {

// Sigma (and optionally mu) of simple returns over a price history of
// lookback+1 rows, ridge-regularized the same way the turbulence index is.
void trailing_moments(const std::deque<std::vector<double>>& history, std::size_t n,
                      Eigen::MatrixXd& sigma, Eigen::VectorXd& mu) {
  const std::size_t rows = history.size() - 1;
  Eigen::MatrixXd returns(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < rows; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      returns(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(i)) =
          history[t + 1][i] / history[t][i] - 1.0;
    }
  }
  mu = returns.colwise().mean();
  Eigen::MatrixXd centered = returns.rowwise() - mu.transpose();
  sigma = (centered.transpose() * centered) / double(rows - 1);
  double eps = 1e-8 * sigma.trace() / double(n);
  if (!(eps > 0.0)) eps = 1e-8;
  sigma.diagonal().array() += eps;
}

Action log_weight_logits(const Eigen::VectorXd& w) {
  Action a(static_cast<std::size_t>(w.size()));
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    a[static_cast<std::size_t>(i)] = std::log(std::max(w[i], 1e-300));
  }
  return a;
}

}  // namespace

MinVariancePolicy::MinVariancePolicy(std::size_t num_symbols, int lookback)
    : n_(num_symbols), lookback_(lookback) {
  if (lookback < static_cast<int>(num_symbols) + 2) {
    throw ConfigError("min_variance lookback must be >= N + 2");
  }
}

Action MinVariancePolicy::act(const Observation& obs, Rng&) {
  history_.push_back(closes_from_observation(obs, n_));
  if (history_.size() > static_cast<std::size_t>(lookback_) + 1) history_.pop_front();
  if (history_.size() < static_cast<std::size_t>(lookback_) + 1) return Action(n_, 0.0);

  Eigen::MatrixXd sigma;
  Eigen::VectorXd mu;
  trailing_moments(history_, n_, sigma, mu);
  auto solution = solve_simplex_qp(sigma, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_)));
  return log_weight_logits(solution.weights);
}

MeanVariancePolicy::MeanVariancePolicy(std::size_t num_symbols, int lookback,
                                       double risk_aversion)
    : n_(num_symbols), lookback_(lookback), risk_aversion_(risk_aversion) {
  if (lookback < static_cast<int>(num_symbols) + 2) {
    throw ConfigError("mean_variance lookback must be >= N + 2");
  }
  if (!(risk_aversion > 0.0)) throw ConfigError("risk_aversion must be > 0");
}

Action MeanVariancePolicy::act(const Observation& obs, Rng&) {
  history_.push_back(closes_from_observation(obs, n_));
  if (history_.size() > static_cast<std::size_t>(lookback_) + 1) history_.pop_front();
  if (history_.size() < static_cast<std::size_t>(lookback_) + 1) return Action(n_, 0.0);

  Eigen::MatrixXd sigma;
  Eigen::VectorXd mu;
  trailing_moments(history_, n_, sigma, mu);
  auto solution = solve_simplex_qp(sigma, mu, risk_aversion_);
  return log_weight_logits(solution.weights);
}

}  // namespace mktsim
