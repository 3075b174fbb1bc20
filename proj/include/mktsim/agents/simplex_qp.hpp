#pragma once

#include <Eigen/Dense>

#include <vector>

namespace mktsim {

// Euclidean projection of v onto the probability simplex
// { w : w_i >= 0, sum w_i = 1 }, by the sort-based algorithm.
std::vector<double> project_to_simplex(const std::vector<double>& v);
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v);

struct SimplexQpResult {
  Eigen::VectorXd weights;
  std::vector<double> objective_trace;  // objective after each iteration
};

// Minimizes w' Sigma w - mu' w over the simplex by projected gradient
// descent with a fixed iteration count and step 1/L, where L bounds the
// gradient's Lipschitz constant via the largest absolute row sum of the
// Hessian. Pass mu = 0 for the minimum-variance problem; pass mu and
// risk_aversion for the mean-variance problem max mu'w - lambda w'Sigma w
// (solved as min lambda w'Sigma w - mu'w).
SimplexQpResult solve_simplex_qp(const Eigen::MatrixXd& sigma, const Eigen::VectorXd& mu,
                                 double risk_aversion = 1.0, int iterations = 500);

}  // namespace mktsim
