#include "mktsim/features/turbulence.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

#include "mktsim/util/errors.hpp"

namespace mktsim {

void TurbulenceConfig::validate(std::size_t num_symbols) const {
  if (lookback < static_cast<int>(num_symbols) + 2) {
    throw ConfigError("turbulence lookback must be >= N + 2 (got lookback " +
                      std::to_string(lookback) + " for N = " + std::to_string(num_symbols) + ")");
  }
  if (!(ridge_epsilon > 0.0)) throw ConfigError("ridge_epsilon must be positive");
}

std::vector<double> turbulence(const MarketPanel& panel, const TurbulenceConfig& cfg) {
  const std::size_t T = panel.rows();
  const std::size_t N = panel.num_symbols();
  cfg.validate(N);
  if (T <= static_cast<std::size_t>(cfg.lookback)) {
    throw DataError("turbulence requires more rows than the lookback");
  }

  // Canonical symbol order by name, so the output does not depend on how the
  // panel happens to order its columns.
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return panel.symbols()[a] < panel.symbols()[b];
  });

  // returns(t, j) = simple return of canonical symbol j at row t; row 0 is 0.
  Eigen::MatrixXd returns = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(T),
                                                  static_cast<Eigen::Index>(N));
  for (std::size_t t = 1; t < T; ++t) {
    for (std::size_t j = 0; j < N; ++j) {
      std::size_t n = order[j];
      returns(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) =
          panel.close(t, n) / panel.close(t - 1, n) - 1.0;
    }
  }

  const int L = cfg.lookback;
  std::vector<double> out(T, 0.0);
  for (std::size_t t = static_cast<std::size_t>(L); t < T; ++t) {
    auto window = returns.middleRows(static_cast<Eigen::Index>(t) - L, L);
    Eigen::VectorXd mu = window.colwise().mean();
    Eigen::MatrixXd centered = window.rowwise() - mu.transpose();
    Eigen::MatrixXd sigma = (centered.transpose() * centered) / double(L - 1);

    double eps = cfg.ridge_epsilon * sigma.trace() / double(N);
    if (!(eps > 0.0)) eps = cfg.ridge_epsilon;
    sigma.diagonal().array() += eps;

    Eigen::VectorXd dev = returns.row(static_cast<Eigen::Index>(t)).transpose() - mu;
    Eigen::VectorXd solved = sigma.ldlt().solve(dev);
    double d = dev.dot(solved);
    out[t] = std::max(d, 0.0);  // clamp tiny negative round-off
  }
  return out;
}

}  // namespace mktsim
