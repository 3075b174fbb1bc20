#include "mktsim/sim/rollout.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "mktsim/util/errors.hpp"

namespace mktsim {

void WorkerPoolConfig::validate() const {
  if (workers < 1) throw ConfigError("worker count must be >= 1");
}

Trajectory run_episode(Env& env, Policy& policy, std::uint64_t seed, std::size_t max_steps) {
  Trajectory traj;
  traj.seed = seed;
  Rng rng(seed);
  policy.begin_episode();

  Observation obs = env.reset(seed);
  traj.values.push_back(env.portfolio_value());
  traj.timestamps.push_back(env.panel().timestamps()[env.state().step_index]);

  for (std::size_t step = 0; step < max_steps; ++step) {
    Action action = policy.act(obs, rng);
    StepResult r = env.step(action);

    Transition tr;
    tr.observation = std::move(obs);
    tr.action = std::move(action);
    tr.reward = r.reward;
    tr.next_observation = r.observation;
    tr.done = r.done;
    traj.transitions.push_back(std::move(tr));

    traj.values.push_back(env.portfolio_value());
    traj.timestamps.push_back(env.panel().timestamps()[env.state().step_index]);

    obs = std::move(r.observation);
    if (r.done) break;
  }
  return traj;
}

RolloutBatch run_batch(const std::vector<EnvFactory>& factories, const Policy& policy,
                       std::size_t steps_per_env, const WorkerPoolConfig& pool) {
  pool.validate();
  const std::size_t E = factories.size();
  if (E == 0) throw ConfigError("run_batch needs at least one environment");
  const std::size_t W = std::min(pool.workers, E);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<Trajectory> trajectories(E);
  std::vector<std::exception_ptr> failures(E);

  auto work = [&](std::size_t worker) {
    // static round-robin: worker w owns envs w, w+W, w+2W, ...
    for (std::size_t i = worker; i < E; i += W) {
      try {
        auto env = factories[i]();
        auto local_policy = policy.clone();
        Trajectory traj =
            run_episode(*env, *local_policy, pool.base_seed + i, steps_per_env);
        traj.env_index = i;
        trajectories[i] = std::move(traj);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  if (W == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(W);
    for (std::size_t w = 0; w < W; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  for (std::size_t i = 0; i < E; ++i) {
    if (failures[i]) {
      try {
        std::rethrow_exception(failures[i]);
      } catch (const std::exception& e) {
        throw RuntimeFault("environment " + std::to_string(i) + " failed: " + e.what());
      }
    }
  }

  RolloutBatch batch;
  batch.trajectories = std::move(trajectories);
  for (const auto& traj : batch.trajectories) batch.total_transitions += traj.transitions.size();
  batch.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  batch.steps_per_second =
      batch.seconds > 0.0 ? static_cast<double>(batch.total_transitions) / batch.seconds : 0.0;
  return batch;
}

std::vector<BenchRow> throughput_benchmark(const EnvFactory& factory, const Policy& policy,
                                           std::size_t envs,
                                           const std::vector<std::size_t>& worker_counts,
                                           std::size_t steps_per_env, std::uint64_t base_seed) {
  std::vector<EnvFactory> factories(envs, factory);
  std::vector<BenchRow> rows;
  rows.reserve(worker_counts.size());
  for (std::size_t w : worker_counts) {
    WorkerPoolConfig pool{std::max<std::size_t>(w, 1), base_seed};
    RolloutBatch batch = run_batch(factories, policy, steps_per_env, pool);
    rows.push_back({std::min(pool.workers, envs), envs, batch.total_transitions, batch.seconds,
                    batch.steps_per_second});
  }
  return rows;
}

void write_benchmark_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << "workers,envs,steps,seconds,steps_per_sec\n";
  for (const auto& r : rows) {
    out << r.workers << ',' << r.envs << ',' << r.steps << ',' << r.seconds << ','
        << r.steps_per_second << '\n';
  }
}

}  // namespace mktsim
