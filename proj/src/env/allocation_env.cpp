#include "mktsim/env/allocation_env.hpp"

#include <algorithm>
#include <cmath>

#include "mktsim/util/errors.hpp"

namespace mktsim {

std::vector<double> softmax(const std::vector<double>& logits) {
  double m = *std::max_element(logits.begin(), logits.end());
  std::vector<double> w(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    w[i] = std::exp(logits[i] - m);
    sum += w[i];
  }
  for (auto& v : w) v /= sum;
  return w;
}

PortfolioAllocationEnv::PortfolioAllocationEnv(std::shared_ptr<const MarketPanel> panel,
                                               EnvConfig cfg,
                                               std::vector<double> turbulence_series)
    : panel_(std::move(panel)), cfg_(std::move(cfg)), turbulence_(std::move(turbulence_series)) {
  cfg_.validate();
  if (!turbulence_.empty() && turbulence_.size() != panel_->rows()) {
    throw ConfigError("turbulence series length must match panel rows");
  }
  if (panel_->rows() < cfg_.start_step + 2) {
    throw DataError("panel too short: need at least 2 rows after start_step");
  }
}

std::size_t PortfolioAllocationEnv::observation_dim() const {
  std::size_t N = panel_->num_symbols();
  return 2 + 2 * N + panel_->num_indicators() * N;
}

Observation PortfolioAllocationEnv::reset(std::uint64_t seed) {
  seed_ = seed;
  state_.step_index = cfg_.start_step;
  state_.cash = cfg_.initial_cash;
  state_.holdings.assign(panel_->num_symbols(), 0.0);
  state_.done = false;
  return observe();
}

Observation PortfolioAllocationEnv::observe() const {
  const std::size_t N = panel_->num_symbols();
  const std::size_t K = panel_->num_indicators();
  const std::size_t t = state_.step_index;
  Observation obs;
  obs.reserve(2 + 2 * N + K * N);
  obs.push_back(state_.cash);
  for (std::size_t n = 0; n < N; ++n) obs.push_back(state_.holdings[n]);
  for (std::size_t n = 0; n < N; ++n) obs.push_back(panel_->close(t, n));
  const std::size_t base = base_feature_names().size();
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t n = 0; n < N; ++n) obs.push_back(panel_->value(t, n, base + k));
  }
  obs.push_back(turbulence_at(t));
  return obs;
}

double PortfolioAllocationEnv::portfolio_value() const {
  return mktsim::portfolio_value(state_, *panel_);
}

StepResult PortfolioAllocationEnv::step(const Action& action) {
  if (state_.done) throw RuntimeFault("step on a finished episode");
  const std::size_t N = panel_->num_symbols();
  if (action.size() != N) {
    throw RuntimeFault("action dimension " + std::to_string(action.size()) + " != " +
                       std::to_string(N));
  }

  const std::size_t t = state_.step_index;
  const double value_before = mktsim::portfolio_value(state_, *panel_);
  std::vector<double> weights = softmax(action);

  // Turnover in currency units against the current (drifted) positions; cash
  // counts as an untraded residual, so first-step investment trades V once.
  double traded_value = 0.0;
  long long traded_symbols = 0;
  for (std::size_t n = 0; n < N; ++n) {
    double current = state_.holdings[n] * panel_->close(t, n);
    double target = weights[n] * value_before;
    double d = std::abs(target - current);
    traded_value += d;
    if (d > 0.0) ++traded_symbols;
  }
  double cost = cfg_.cost_model.kind == CostModel::Kind::FlatFee
                    ? cfg_.cost_model.flat_fee * static_cast<double>(traded_symbols)
                    : cfg_.cost_model.rate * traded_value;
  cost = std::min(cost, value_before);  // cannot pay more than the portfolio holds

  // Rebalance the post-cost value onto the target weights.
  double invested = value_before - cost;
  for (std::size_t n = 0; n < N; ++n) {
    state_.holdings[n] = weights[n] * invested / panel_->close(t, n);
  }
  state_.cash = 0.0;

  state_.step_index = t + 1;
  state_.done = state_.step_index + 1 >= panel_->rows();

  double value_next = mktsim::portfolio_value(state_, *panel_);
  double reward = value_next > 0.0 && value_before > 0.0
                      ? std::log(value_next / value_before)
                      : 0.0;

  StepResult result;
  result.observation = observe();
  result.reward = reward;
  result.done = state_.done;
  result.info = {{"value_before", value_before},
                 {"value_next", value_next},
                 {"cost_paid", cost},
                 {"turnover", traded_value},
                 {"turbulence_triggered", 0.0}};
  return result;
}

}  // namespace mktsim
