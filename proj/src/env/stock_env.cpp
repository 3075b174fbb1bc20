#include "mktsim/env/stock_env.hpp"

#include <algorithm>
#include <cmath>

#include "mktsim/util/errors.hpp"

namespace mktsim {

void CostModel::validate() const {
  if (flat_fee < 0.0) throw ConfigError("flat_fee must be >= 0");
  if (rate < 0.0 || rate >= 1.0) throw ConfigError("cost rate must be in [0, 1)");
}

void EnvConfig::validate() const {
  if (!(initial_cash > 0.0)) throw ConfigError("initial_cash must be > 0");
  if (hmax < 1) throw ConfigError("hmax must be >= 1");
  cost_model.validate();
  if (bid_ask_spread < 0.0) throw ConfigError("bid_ask_spread must be >= 0");
  if (turbulence_threshold && *turbulence_threshold < 0.0) {
    throw ConfigError("turbulence_threshold must be >= 0");
  }
  if (!(reward_scaling > 0.0)) throw ConfigError("reward_scaling must be > 0");
}

double portfolio_value(const EnvState& state, const MarketPanel& panel) {
  double value = state.cash;
  for (std::size_t n = 0; n < state.holdings.size(); ++n) {
    value += state.holdings[n] * panel.close(state.step_index, n);
  }
  return value;
}

StockTradingEnv::StockTradingEnv(std::shared_ptr<const MarketPanel> panel, EnvConfig cfg,
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

std::size_t StockTradingEnv::observation_dim() const {
  std::size_t N = panel_->num_symbols();
  return 2 + 2 * N + panel_->num_indicators() * N;
}

Observation StockTradingEnv::reset(std::uint64_t seed) {
  seed_ = seed;
  state_.step_index = cfg_.start_step;
  state_.cash = cfg_.initial_cash;
  state_.holdings.assign(panel_->num_symbols(), 0.0);
  state_.done = false;
  return observe();
}

Observation StockTradingEnv::observe() const {
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

double StockTradingEnv::portfolio_value() const { return mktsim::portfolio_value(state_, *panel_); }

StepResult StockTradingEnv::step(const Action& action) {
  if (state_.done) throw RuntimeFault("step on a finished episode");
  const std::size_t N = panel_->num_symbols();
  if (action.size() != N) {
    throw RuntimeFault("action dimension " + std::to_string(action.size()) + " != " +
                       std::to_string(N));
  }

  const std::size_t t = state_.step_index;
  const double value_before = mktsim::portfolio_value(state_, *panel_);

  // (1) clip to [-1, 1] and map to integer share deltas
  std::vector<long long> delta(N);
  for (std::size_t n = 0; n < N; ++n) {
    double a = std::clamp(action[n], -1.0, 1.0);
    delta[n] = std::llround(a * cfg_.hmax);
  }

  // (2) risk override: halt buying, liquidate on sell intents
  bool turbulent = cfg_.turbulence_threshold && turbulence_at(t) >= *cfg_.turbulence_threshold;
  if (turbulent) {
    for (std::size_t n = 0; n < N; ++n) {
      if (delta[n] > 0) delta[n] = 0;
      else if (delta[n] < 0) delta[n] = -static_cast<long long>(state_.holdings[n]);
    }
  }

  double cost_paid = 0.0;
  double slippage_paid = 0.0;
  long long trades = 0;

  // (3) sells first, at close*(1-spread), never below zero holdings; a sell
  // whose fee exceeds proceeds plus cash on hand is skipped outright
  for (std::size_t n = 0; n < N; ++n) {
    if (delta[n] >= 0) continue;
    long long held = static_cast<long long>(state_.holdings[n]);
    long long qty = std::min(-delta[n], held);
    if (qty <= 0) continue;
    double close = panel_->close(t, n);
    double price = close * (1.0 - cfg_.bid_ask_spread);
    double proceeds = qty * price;
    double cost = cfg_.cost_model.cost(qty * close);
    if (state_.cash + proceeds - cost < 0.0) continue;
    state_.cash += proceeds - cost;
    state_.holdings[n] -= static_cast<double>(qty);
    cost_paid += cost;
    slippage_paid += qty * close * cfg_.bid_ask_spread;
    ++trades;
  }

  // (4) buys, in symbol order, truncated to what cash allows
  for (std::size_t n = 0; n < N; ++n) {
    if (delta[n] <= 0) continue;
    double close = panel_->close(t, n);
    double price = close * (1.0 + cfg_.bid_ask_spread);
    long long qty = delta[n];
    auto total_cost = [&](long long q) {
      return q * price + cfg_.cost_model.cost(q * close);
    };
    if (total_cost(qty) > state_.cash) {
      double per_share = price + (cfg_.cost_model.kind == CostModel::Kind::PerShareRate
                                      ? cfg_.cost_model.rate * close
                                      : 0.0);
      double budget = state_.cash - (cfg_.cost_model.kind == CostModel::Kind::FlatFee
                                         ? cfg_.cost_model.flat_fee
                                         : 0.0);
      qty = budget > 0.0 ? static_cast<long long>(budget / per_share) : 0;
      qty = std::min(qty, delta[n]);
      while (qty > 0 && total_cost(qty) > state_.cash) --qty;
    }
    if (qty <= 0) continue;
    double cost = cfg_.cost_model.cost(qty * close);
    state_.cash -= qty * price + cost;
    state_.holdings[n] += static_cast<double>(qty);
    cost_paid += cost;
    slippage_paid += qty * close * cfg_.bid_ask_spread;
    ++trades;
  }
  double value_after_trade = mktsim::portfolio_value(state_, *panel_);

  // (5) advance the clock
  state_.step_index = t + 1;
  state_.done = state_.step_index + 1 >= panel_->rows();

  // (6) reward: scaled change in portfolio value across the step
  double value_next = mktsim::portfolio_value(state_, *panel_);
  double reward = (value_next - value_before) * cfg_.reward_scaling;

  StepResult result;
  result.observation = observe();
  result.reward = reward;
  result.done = state_.done;
  result.info = {{"value_before", value_before},
                 {"value_after_trade", value_after_trade},
                 {"value_next", value_next},
                 {"cost_paid", cost_paid},
                 {"slippage_paid", slippage_paid},
                 {"trades", static_cast<double>(trades)},
                 {"turbulence_triggered", turbulent ? 1.0 : 0.0}};
  return result;
}

}  // namespace mktsim
