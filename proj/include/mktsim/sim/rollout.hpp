#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mktsim/agents/policy.hpp"
#include "mktsim/env/env.hpp"
#include "mktsim/env/trajectory.hpp"

namespace mktsim {

struct WorkerPoolConfig {
  std::size_t workers = 1;
  std::uint64_t base_seed = 0;
  // Environment count is the number of factories handed to run_batch.

  void validate() const;
};

struct RolloutBatch {
  std::vector<Trajectory> trajectories;  // canonical order: by environment index
  std::size_t total_transitions = 0;
  double seconds = 0.0;       // wall clock, excluded from determinism checks
  double steps_per_second = 0.0;
};

// Steps one environment to episode end (or max_steps transitions) under the
// given policy. The policy's episode state is reset first.
Trajectory run_episode(Env& env, Policy& policy, std::uint64_t seed,
                       std::size_t max_steps = std::numeric_limits<std::size_t>::max());

// Rolls out one environment per factory, env i seeded base_seed + i, each
// driven by its own clone of the policy prototype. Work is distributed
// round-robin over the worker threads; trajectories are assembled in
// environment-index order, so the payload is a pure function of
// (factories, policy, seeds) and never of the worker count or scheduling.
// A worker failure surfaces as a RuntimeFault naming the environment index.
RolloutBatch run_batch(const std::vector<EnvFactory>& factories, const Policy& policy,
                       std::size_t steps_per_env, const WorkerPoolConfig& pool);

struct BenchRow {
  std::size_t workers = 0;   // effective worker count (capped at env count)
  std::size_t envs = 0;
  std::size_t steps = 0;     // total transitions executed
  double seconds = 0.0;
  double steps_per_second = 0.0;
};

// Measures rollout throughput for each requested worker count. Purely
// observational; throughput is hardware-dependent and never asserted on.
std::vector<BenchRow> throughput_benchmark(const EnvFactory& factory, const Policy& policy,
                                           std::size_t envs,
                                           const std::vector<std::size_t>& worker_counts,
                                           std::size_t steps_per_env,
                                           std::uint64_t base_seed = 0);

// CSV with header workers,envs,steps,seconds,steps_per_sec.
void write_benchmark_csv(const std::string& path, const std::vector<BenchRow>& rows);

}  // namespace mktsim
