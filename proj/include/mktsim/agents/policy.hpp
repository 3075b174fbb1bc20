#pragma once

#include <memory>
#include <random>
#include <string>

#include "mktsim/env/types.hpp"

namespace mktsim {

using Rng = std::mt19937_64;

// Plug-and-play policy contract: anything mapping observations to actions can
// be trained and evaluated in any environment with matching dimensions.
//
// Policies may keep per-episode state (price history and the like); rollout
// code clones the policy per environment, so learned parameters are shared by
// value while episode state stays private. The classical baselines never
// consult the rng.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual Action act(const Observation& obs, Rng& rng) = 0;

  // Clears per-episode state; called at every environment reset.
  virtual void begin_episode() {}

  // When true, exploration noise is disabled (evaluation mode).
  virtual void set_deterministic(bool) {}

  virtual std::size_t action_dim() const = 0;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<Policy> clone() const = 0;
};

}  // namespace mktsim
