#include "li/funceq.hpp"

#include <cmath>
#include <string>

#include "li/errors.hpp"

namespace li {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw NumericError(std::string("overflow while evaluating ") + what);
  }
}

}  // namespace

double ExpSolution::psi(double x) const { return c * std::exp(a * x); }

double product_residual(const ExpSolution& sol, double tau, double xi,
                        double eta) {
  if (sol.a == 0.0 || !(sol.c > 0.0)) {
    throw DomainError("product solution needs A != 0 and C > 0");
  }
  const double ex = std::exp(sol.a * xi);
  const double ey = std::exp(sol.a * eta);
  require_finite(ex + ey, "exp(A xi) + exp(A eta)");
  if (!(ex + ey > 0.0)) {
    throw DomainError("exp(A xi) + exp(A eta) must be positive");
  }
  const double zeta = std::log(ex + ey) / sol.a;
  const double lhs = sol.psi(tau + xi) + sol.psi(tau + eta);
  const double rhs = sol.psi(tau + zeta);
  require_finite(lhs, "Psi(tau+xi) + Psi(tau+eta)");
  require_finite(rhs, "Psi(tau+zeta)");
  return lhs - rhs;
}

double two_term_check(const ExpSolution& sol, double theta, int n) {
  if (sol.a == 0.0 || !(sol.c > 0.0)) {
    throw DomainError("product solution needs A != 0 and C > 0");
  }
  if (n < -40 || n > 40) {
    throw DomainError("|n| <= 40 in the 2-term recurrence check");
  }
  const double step = std::log(2.0) / sol.a;
  const double lhs = sol.psi(theta + n * step);
  const double rhs = std::ldexp(1.0, n) * sol.psi(theta);
  require_finite(lhs, "Psi(theta + n a)");
  require_finite(rhs, "2^n Psi(theta)");
  return lhs - rhs;
}

double three_term_closed_form(double psi0, double psi_b, int m) {
  if (m < -60 || m > 60) {
    throw DomainError("|m| <= 60 in the 3-term closed form");
  }
  const double s5 = std::sqrt(5.0);
  const double phi = 0.5 * (1.0 + s5);
  const double psi_minus = -2.0 / (1.0 + s5);  // = 1 - phi
  const double coeff_plus = 2.0 * psi0 / (5.0 + s5) + psi_b / s5;
  const double coeff_minus = 2.0 * psi0 / (5.0 - s5) - psi_b / s5;
  return coeff_plus * std::pow(phi, m) + coeff_minus * std::pow(psi_minus, m);
}

double PotentialSolution::h(double m) const {
  if (!(m > 0.0)) throw DomainError("potential argument must be positive");
  return a + b * m + c * (m * std::log(m) - m);
}

double PotentialSolution::h_prime(double m) const {
  if (!(m > 0.0)) throw DomainError("potential argument must be positive");
  return b + c * std::log(m);
}

double variational_residual(const PotentialSolution& sol, double mx, double my,
                            double b1) {
  if (!(mx > 0.0) || !(my > 0.0)) {
    throw DomainError("variational arguments must be positive");
  }
  // Cross-check the analytic derivative against central differences before
  // relying on it.
  const double m = mx * my;
  const double step = 1e-6 * std::max(1.0, m);
  const double fd = (sol.h(m + step) - sol.h(m - step)) / (2.0 * step);
  const double analytic = sol.h_prime(m);
  const double scale = std::max({1.0, std::abs(fd), std::abs(analytic)});
  if (std::abs(fd - analytic) > 1e-6 * scale) {
    throw NumericError("derivative of H disagrees with finite differences");
  }
  const double lambda = b1 + sol.c * std::log(mx);
  const double mu = (sol.b - b1) + sol.c * std::log(my);
  return analytic - lambda - mu;
}

double variational_residual(const PotentialSolution& sol, double mx,
                            double my) {
  return variational_residual(sol, mx, my, 0.5 * sol.b);
}

CauchyReport cauchy_check_fn(
    const std::function<Rational(const Rational&)>& f,
    const std::vector<Rational>& samples, const Rational& t0) {
  CauchyReport report;
  for (const auto& u : samples) {
    if (!report.additive) break;
    for (const auto& v : samples) {
      if (f(u + v) != f(u) + f(v)) {
        report.additive = false;
        report.additivity_witness = std::make_pair(u, v);
        break;
      }
    }
  }
  const Rational f_t0 = f(t0);
  for (const auto& s : samples) {
    if (t0 == 0) break;
    const Rational q = s / t0;  // the sample as a rational multiple of t0
    if (f(q * t0) != q * f_t0) {
      report.homogeneous = false;
      report.homogeneity_witness = q;
      break;
    }
  }
  return report;
}

CauchyReport cauchy_check(const Rational& c,
                          const std::vector<Rational>& samples,
                          const Rational& t0) {
  return cauchy_check_fn([&c](const Rational& t) { return c * t; }, samples,
                         t0);
}

}  // namespace li
