#include "mktsim/agents/evaluate.hpp"

#include "mktsim/sim/rollout.hpp"

namespace mktsim {

Trajectory evaluate_policy(const Policy& policy, const EnvFactory& env_factory,
                           std::uint64_t seed) {
  auto env = env_factory();
  auto local = policy.clone();
  local->set_deterministic(true);
  return run_episode(*env, *local, seed);
}

}  // namespace mktsim
