#include "li/maxent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace li {

namespace {

void validate(const std::vector<double>& u,
              const std::vector<LinearConstraint>& constraints) {
  if (u.empty()) throw DomainError("source measure is empty");
  for (double x : u) {
    if (!std::isfinite(x) || x <= 0.0) {
      throw DomainError("source entries must be finite and strictly positive");
    }
  }
  for (const auto& c : constraints) {
    if (c.coefficients.size() != u.size()) {
      throw DimensionError(
          "constraint coefficient vector must match the atom count");
    }
    bool any = false;
    for (double f : c.coefficients) {
      if (!std::isfinite(f)) throw DomainError("non-finite constraint coefficient");
      any = any || f != 0.0;
    }
    if (!any) throw DomainError("constraint with all-zero coefficients");
    if (!std::isfinite(c.target)) throw DomainError("non-finite constraint target");
  }
}

std::vector<double> primal_point(const std::vector<double>& u,
                                 const std::vector<LinearConstraint>& cs,
                                 const std::vector<double>& lambdas) {
  std::vector<double> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double exponent = 0.0;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      exponent += lambdas[k] * cs[k].coefficients[i];
    }
    w[i] = u[i] * std::exp(exponent);
    if (!std::isfinite(w[i])) {
      throw NumericError(
          "overflow while forming w = u exp(lambda.f); consider rescaling "
          "the constraints");
    }
  }
  return w;
}

// Dual objective (up to the constant sum of u): sum_i w_i - sum_k lambda_k F_k.
double dual_objective(const std::vector<double>& w,
                      const std::vector<LinearConstraint>& cs,
                      const std::vector<double>& lambdas) {
  double d = 0.0;
  for (double x : w) d += x;
  for (std::size_t k = 0; k < cs.size(); ++k) d -= lambdas[k] * cs[k].target;
  return d;
}

}  // namespace

std::pair<std::vector<double>, std::vector<std::vector<double>>> dual_gradient(
    const std::vector<double>& u,
    const std::vector<LinearConstraint>& constraints,
    const std::vector<double>& lambdas) {
  validate(u, constraints);
  if (lambdas.size() != constraints.size()) {
    throw DimensionError("one multiplier per constraint expected");
  }
  const std::vector<double> w = primal_point(u, constraints, lambdas);
  const std::size_t k = constraints.size();
  std::vector<double> values(k, 0.0);
  std::vector<std::vector<double>> jac(k, std::vector<double>(k, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      values[a] += constraints[a].coefficients[i] * w[i];
    }
    values[a] -= constraints[a].target;
    for (std::size_t b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        s += constraints[a].coefficients[i] * constraints[b].coefficients[i] *
             w[i];
      }
      jac[a][b] = s;
      jac[b][a] = s;
    }
  }
  return {std::move(values), std::move(jac)};
}

SolveResult solve(const std::vector<double>& u,
                  const std::vector<LinearConstraint>& constraints,
                  double tol, int max_iter) {
  validate(u, constraints);
  const std::size_t k = constraints.size();

  SolveResult result;
  result.lambdas.assign(k, 0.0);
  if (k == 0) {
    result.w = u;
    result.max_constraint_residual = 0.0;
    return result;
  }

  std::vector<double> w = primal_point(u, constraints, result.lambdas);
  for (int iter = 1; iter <= max_iter; ++iter) {
    auto [values, jac] = dual_gradient(u, constraints, result.lambdas);
    double max_residual = 0.0;
    for (double v : values) max_residual = std::max(max_residual, std::abs(v));
    result.iterations = iter - 1;
    result.max_constraint_residual = max_residual;
    if (max_residual <= tol) {
      result.w = primal_point(u, constraints, result.lambdas);
      return result;
    }

    Eigen::MatrixXd j(k, k);
    Eigen::VectorXd g(k);
    for (std::size_t a = 0; a < k; ++a) {
      g(static_cast<Eigen::Index>(a)) = values[a];
      for (std::size_t b = 0; b < k; ++b) {
        j(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            jac[a][b];
      }
    }
    // Rank-revealing solve: redundant (consistent) constraints make the
    // Hessian singular, and the minimum-norm Newton step still converges.
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(j);
    Eigen::VectorXd step = cod.solve(-g);
    if (!step.allFinite()) {
      throw NumericError("non-finite Newton step in the dual iteration");
    }

    const double d0 = dual_objective(w, constraints, result.lambdas);
    double alpha = 1.0;
    bool accepted = false;
    std::vector<double> trial(k);
    for (int halvings = 0; halvings < 60; ++halvings) {
      for (std::size_t a = 0; a < k; ++a) {
        trial[a] = result.lambdas[a] + alpha * step(static_cast<Eigen::Index>(a));
      }
      std::vector<double> w_trial;
      try {
        w_trial = primal_point(u, constraints, trial);
      } catch (const NumericError&) {
        alpha *= 0.5;
        continue;
      }
      const double d1 = dual_objective(w_trial, constraints, trial);
      if (d1 <= d0 + 1e-12 * std::max(1.0, std::abs(d0))) {
        result.lambdas = trial;
        w = std::move(w_trial);
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      throw NoConvergenceError(
          "dual step stalled at residual " + std::to_string(max_residual) +
          "; the constraints may be infeasible");
    }
  }

  auto [values, jac] = dual_gradient(u, constraints, result.lambdas);
  double max_residual = 0.0;
  for (double v : values) max_residual = std::max(max_residual, std::abs(v));
  if (max_residual <= tol) {
    result.iterations = max_iter;
    result.max_constraint_residual = max_residual;
    result.w = primal_point(u, constraints, result.lambdas);
    return result;
  }
  throw NoConvergenceError("no convergence after " + std::to_string(max_iter) +
                           " iterations; max constraint residual " +
                           std::to_string(max_residual) +
                           " (infeasible or inconsistent constraints?)");
}

}  // namespace li
