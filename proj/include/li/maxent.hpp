#pragma once

#include <utility>
#include <vector>

#include "li/errors.hpp"

namespace li {

/// One linear equality constraint sum_i coefficients[i] * w_i = target.
struct LinearConstraint {
  std::vector<double> coefficients;
  double target = 0.0;
};

struct SolveResult {
  std::vector<double> w;        // the assigned measure
  std::vector<double> lambdas;  // one multiplier per constraint
  int iterations = 0;
  double max_constraint_residual = 0.0;
};

/// Dual gradient and Hessian at the given multipliers:
///   values_k   = sum_i f_ki u_i exp(sum_l lambda_l f_li) - F_k
///   jacobian_kl = sum_i f_ki f_li w_i   (symmetric positive semidefinite)
std::pair<std::vector<double>, std::vector<std::vector<double>>> dual_gradient(
    const std::vector<double>& u,
    const std::vector<LinearConstraint>& constraints,
    const std::vector<double>& lambdas);

/// Minimizes divergence(w, u) subject to the constraints, via Newton
/// iteration on the smooth convex dual. Stationarity gives
/// w_i = u_i exp(sum_k lambda_k f_ki); the multipliers are tuned until every
/// constraint residual is at most tol. Damping is by step halving until the
/// dual objective decreases. Infeasible constraint sets surface as
/// NoConvergenceError with a residual report.
SolveResult solve(const std::vector<double>& u,
                  const std::vector<LinearConstraint>& constraints,
                  double tol = 1e-10, int max_iter = 100);

}  // namespace li
