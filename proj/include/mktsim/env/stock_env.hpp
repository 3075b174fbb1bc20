#pragma once

#include <memory>
#include <vector>

#include "mktsim/env/env.hpp"

namespace mktsim {

// Share-level trading over a replayed panel. Actions are per-symbol intents
// in [-1, 1], mapped to integer share deltas round(a_i * hmax).
//
// Step order: clip and map the action; apply the turbulence override when the
// index is at or above the threshold (buys zeroed, sell intents liquidate the
// full holding); execute sells at close*(1-spread), then buys at
// close*(1+spread) in symbol order, each buy truncated so cash stays
// non-negative; advance one row. Reward is the scaled change in portfolio
// value. Cash and holdings never go negative.
class StockTradingEnv final : public Env {
 public:
  StockTradingEnv(std::shared_ptr<const MarketPanel> panel, EnvConfig cfg,
                  std::vector<double> turbulence_series = {});

  Observation reset(std::uint64_t seed) override;
  StepResult step(const Action& action) override;

  std::size_t observation_dim() const override;
  std::size_t action_dim() const override { return panel_->num_symbols(); }
  const EnvState& state() const override { return state_; }
  const MarketPanel& panel() const override { return *panel_; }
  double portfolio_value() const override;

  const EnvConfig& config() const { return cfg_; }
  double turbulence_at(std::size_t row) const {
    return row < turbulence_.size() ? turbulence_[row] : 0.0;
  }

 private:
  Observation observe() const;

  std::shared_ptr<const MarketPanel> panel_;
  EnvConfig cfg_;
  std::vector<double> turbulence_;
  EnvState state_;
  std::uint64_t seed_ = 0;
};

}  // namespace mktsim
