#pragma once

#include <vector>

#include "mktsim/data/market_panel.hpp"

namespace mktsim {

struct TurbulenceConfig {
  int lookback = 252;          // periods used for the historical mean/covariance
  double ridge_epsilon = 1e-8; // scale of the ridge term, relative to trace(Sigma)/N

  void validate(std::size_t num_symbols) const;
};

// Mahalanobis distance of the current cross-sectional return vector from its
// trailing distribution:
//
//   d_t = (y_t - mu)' (Sigma + eps I)^{-1} (y_t - mu)
//
// with y_t the per-symbol simple returns at t, and mu/Sigma the mean and
// sample covariance of the returns over [t - lookback, t - 1]. Entries before
// the lookback horizon are 0. The ridge term eps is
// ridge_epsilon * trace(Sigma)/N (falling back to ridge_epsilon itself for a
// zero-variance window), so the quadratic form is always well defined.
//
// The result is independent of the panel's symbol ordering: symbols are
// reordered canonically by name internally, making permutation invariance
// hold bitwise.
std::vector<double> turbulence(const MarketPanel& panel, const TurbulenceConfig& cfg = {});

}  // namespace mktsim
