#pragma once

#include <cstdint>
#include <vector>

#include "mktsim/env/types.hpp"

namespace mktsim {

// One episode (or partial episode) of experience: the ordered transitions
// plus the portfolio-value series. values has one more entry than
// transitions; values[k] is the portfolio value before transition k, at the
// prices of timestamps[k].
struct Trajectory {
  std::size_t env_index = 0;
  std::uint64_t seed = 0;
  std::vector<Transition> transitions;
  std::vector<double> values;
  std::vector<std::int64_t> timestamps;

  double total_reward() const {
    double sum = 0.0;
    for (const auto& tr : transitions) sum += tr.reward;
    return sum;
  }
  bool finished() const { return !transitions.empty() && transitions.back().done; }
};

}  // namespace mktsim
