#include "mktsim/agents/simplex_qp.hpp"

#include <algorithm>
#include <numeric>

#include "mktsim/util/errors.hpp"

namespace mktsim {

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());

  double running = 0.0;
  double tau = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    running += u[static_cast<std::size_t>(i)];
    double candidate = (running - 1.0) / static_cast<double>(i + 1);
    if (u[static_cast<std::size_t>(i)] > candidate) tau = candidate;
  }
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) w[i] = std::max(v[i] - tau, 0.0);
  // Exact re-normalization of the surviving support keeps |sum - 1| at
  // round-off level even for adversarial inputs.
  double sum = w.sum();
  if (sum > 0.0) w /= sum;
  return w;
}

std::vector<double> project_to_simplex(const std::vector<double>& v) {
  Eigen::Map<const Eigen::VectorXd> m(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::VectorXd w = project_to_simplex(Eigen::VectorXd(m));
  return {w.data(), w.data() + w.size()};
}

SimplexQpResult solve_simplex_qp(const Eigen::MatrixXd& sigma, const Eigen::VectorXd& mu,
                                 double risk_aversion, int iterations) {
  const Eigen::Index n = sigma.rows();
  if (sigma.cols() != n || mu.size() != n) throw ConfigError("simplex qp: dimension mismatch");
  if (!(risk_aversion > 0.0)) throw ConfigError("risk_aversion must be > 0");

  // min f(w) = lambda w'Sigma w - mu'w ; grad f = 2 lambda Sigma w - mu
  auto objective = [&](const Eigen::VectorXd& w) {
    return risk_aversion * w.dot(sigma * w) - mu.dot(w);
  };

  // Lipschitz bound for the gradient: 2 lambda * max_i sum_j |Sigma_ij|
  // (infinity norm dominates the spectral radius for symmetric Sigma).
  double row_sum = sigma.cwiseAbs().rowwise().sum().maxCoeff();
  double lipschitz = 2.0 * risk_aversion * row_sum;
  double step = lipschitz > 0.0 ? 1.0 / lipschitz : 1.0;

  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  SimplexQpResult result;
  result.objective_trace.reserve(static_cast<std::size_t>(iterations) + 1);
  result.objective_trace.push_back(objective(w));

  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd grad = 2.0 * risk_aversion * (sigma * w) - mu;
    Eigen::VectorXd candidate = project_to_simplex(Eigen::VectorXd(w - step * grad));
    // Monotone safeguard: a projected step that fails to improve is not taken.
    if (objective(candidate) <= result.objective_trace.back()) {
      w = std::move(candidate);
    }
    result.objective_trace.push_back(objective(w));
  }
  result.weights = std::move(w);
  return result;
}

}  // namespace mktsim
