#pragma once

#include <cstdint>

#include "mktsim/agents/policy.hpp"
#include "mktsim/env/env.hpp"
#include "mktsim/env/trajectory.hpp"

namespace mktsim {

// One deterministic full episode (exploration disabled) on a fresh
// environment. Evaluating twice with the same inputs yields the same
// trajectory.
Trajectory evaluate_policy(const Policy& policy, const EnvFactory& env_factory,
                           std::uint64_t seed);

}  // namespace mktsim
