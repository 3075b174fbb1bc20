#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "mktsim/data/market_panel.hpp"
#include "mktsim/env/types.hpp"

namespace mktsim {

// Episodic data-replay trading environment. Instances own their state and
// are single-threaded; the underlying panel is shared read-only.
class Env {
 public:
  virtual ~Env() = default;

  virtual Observation reset(std::uint64_t seed) = 0;
  virtual StepResult step(const Action& action) = 0;

  virtual std::size_t observation_dim() const = 0;
  virtual std::size_t action_dim() const = 0;
  virtual const EnvState& state() const = 0;
  virtual const MarketPanel& panel() const = 0;

  // cash + holdings . close at the current step.
  virtual double portfolio_value() const = 0;
};

using EnvFactory = std::function<std::unique_ptr<Env>()>;

// cash + holdings . close at state.step_index.
double portfolio_value(const EnvState& state, const MarketPanel& panel);

}  // namespace mktsim
