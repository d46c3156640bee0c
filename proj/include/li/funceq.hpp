#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "li/rational.hpp"

namespace li {

/// Psi(x) = C exp(A x), the solution of the product equation
/// Psi(tau + xi) + Psi(tau + eta) = Psi(tau + zeta(xi, eta)).
struct ExpSolution {
  double a = 1.0;  // A, nonzero
  double c = 1.0;  // C, positive

  double psi(double x) const;
};

/// Evaluates zeta = A^-1 log(e^{A xi} + e^{A eta}) and returns
/// Psi(tau+xi) + Psi(tau+eta) - Psi(tau+zeta); zero up to rounding.
double product_residual(const ExpSolution& sol, double tau, double xi,
                        double eta);

/// Psi(theta + n a) - 2^n Psi(theta) with a = A^-1 log 2; |n| <= 40.
double two_term_check(const ExpSolution& sol, double theta, int n);

/// Closed form of the 3-term recurrence psi_m = psi_{m-1} + psi_{m-2} with
/// golden-ratio powers; equals iterating the recurrence from the base values.
/// |m| <= 60.
double three_term_closed_form(double psi0, double psi_b, int m);

/// H(m) = A + B m + C (m log m - m), the solution of the variational
/// equation H'(m_x m_y) = lambda(m_x) + mu(m_y).
struct PotentialSolution {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  double h(double m) const;
  double h_prime(double m) const;  // B + C log m
};

/// H'(mx my) - [lambda(mx) + mu(my)] with lambda(x) = B1 + C log x and
/// mu(y) = (B - B1) + C log y; zero up to rounding. Also cross-checks H'
/// against central finite differences of H (relative error 1e-6).
double variational_residual(const PotentialSolution& sol, double mx, double my,
                            double b1);
double variational_residual(const PotentialSolution& sol, double mx, double my);

struct CauchyReport {
  bool additive = true;
  std::optional<std::pair<Rational, Rational>> additivity_witness;
  bool homogeneous = true;  // f(q t0) == q f(t0) over the samples
  std::optional<Rational> homogeneity_witness;
  bool ok() const { return additive && homogeneous; }
};

/// Verifies f(u + v) = f(u) + f(v) on all sample pairs and rational
/// homogeneity against the base point t0, exactly in rational arithmetic.
CauchyReport cauchy_check_fn(
    const std::function<Rational(const Rational&)>& f,
    const std::vector<Rational>& samples, const Rational& t0);

/// The linear solution f(t) = c t; always passes.
CauchyReport cauchy_check(const Rational& c,
                          const std::vector<Rational>& samples,
                          const Rational& t0 = Rational(1));

}  // namespace li
