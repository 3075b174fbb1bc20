#pragma once

#include <memory>
#include <vector>

#include "mktsim/env/env.hpp"

namespace mktsim {

// Weight-level portfolio allocation over a replayed panel. Actions are
// per-symbol logits; the portfolio is rebalanced each step to
// softmax(logits) value-weights, holdings are fractional, and rebalancing
// turnover is charged at the configured cost rate. Reward is log(V'/V).
class PortfolioAllocationEnv final : public Env {
 public:
  PortfolioAllocationEnv(std::shared_ptr<const MarketPanel> panel, EnvConfig cfg,
                         std::vector<double> turbulence_series = {});

  Observation reset(std::uint64_t seed) override;
  StepResult step(const Action& action) override;

  std::size_t observation_dim() const override;
  std::size_t action_dim() const override { return panel_->num_symbols(); }
  const EnvState& state() const override { return state_; }
  const MarketPanel& panel() const override { return *panel_; }
  double portfolio_value() const override;

  const EnvConfig& config() const { return cfg_; }

 private:
  Observation observe() const;
  double turbulence_at(std::size_t row) const {
    return row < turbulence_.size() ? turbulence_[row] : 0.0;
  }

  std::shared_ptr<const MarketPanel> panel_;
  EnvConfig cfg_;
  std::vector<double> turbulence_;
  EnvState state_;
  std::uint64_t seed_ = 0;
};

// Numerically stable softmax.
std::vector<double> softmax(const std::vector<double>& logits);

}  // namespace mktsim
