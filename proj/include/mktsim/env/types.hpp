#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mktsim {

// Per-trade friction model: either a fixed dollar amount per executed trade
// or a rate applied to traded value.
struct CostModel {
  enum class Kind { FlatFee, PerShareRate };
  Kind kind = Kind::PerShareRate;
  double flat_fee = 0.0;  // currency per executed trade
  double rate = 0.001;    // fraction of traded value, e.g. 1/1000

  void validate() const;
  // Cost of trading `traded_value` currency units in one order (0 shares -> 0).
  double cost(double traded_value) const {
    if (traded_value <= 0.0) return 0.0;
    return kind == Kind::FlatFee ? flat_fee : rate * traded_value;
  }
};

struct EnvConfig {
  double initial_cash = 1e6;
  int hmax = 100;                 // max shares per symbol per step
  CostModel cost_model;
  double bid_ask_spread = 0.0;    // half-spread: buys at close*(1+s), sells at close*(1-s)
  std::optional<double> turbulence_threshold;  // disabled when absent
  double reward_scaling = 1.0;
  std::size_t start_step = 0;     // first tradable panel row

  void validate() const;
};

// Full mutable trading state. Holdings are share counts; the stock
// environment keeps them integral, the allocation environment fractional.
struct EnvState {
  std::size_t step_index = 0;
  double cash = 0.0;
  std::vector<double> holdings;
  bool done = false;
};

// Agent output: per-symbol trade intents in [-1, 1] (stock env) or portfolio
// logits (allocation env).
using Action = std::vector<double>;

// Flat observation vector:
//   [cash, holdings(N), close(N), indicators(N*K), turbulence(1)]
// with the indicator block laid out feature-major (all symbols of the first
// indicator, then the next). Dimension D = 2 + 2N + K*N.
using Observation = std::vector<double>;

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
  std::map<std::string, double> info;
};

struct Transition {
  Observation observation;
  Action action;
  double reward = 0.0;
  Observation next_observation;
  bool done = false;
};

}  // namespace mktsim
