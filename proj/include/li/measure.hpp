#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "li/lattice.hpp"

namespace li {

/// A strictly positive valuation of a lattice: one value per atom, with the
/// value of an element defined as the sum over its atoms. The bottom element
/// is worth zero. Zero or negative atom values are rejected at construction.
class Measure {
 public:
  Measure(Lattice lattice, std::vector<double> atom_values);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<double>& atom_values() const { return atom_values_; }

  double value(const Element& x) const;

 private:
  Lattice lattice_;
  std::vector<double> atom_values_;
};

/// m(x v y) + m(x ^ y) - m(x) - m(y); zero up to rounding for every measure.
double check_inclusion_exclusion(const Measure& m, const Element& x,
                                 const Element& y);

/// Measure on a product lattice whose composite atom (i, j) is worth
/// m1(a_i) * m2(b_j), so that factor elements multiply.
Measure product_measure(const Measure& m1, const Measure& m2,
                        const ProductLattice& product);

/// A strictly increasing invertible scalar map and its inverse, used to
/// re-express the combination of values on an alternative grade.
class Regrade {
 public:
  static Regrade identity();
  static Regrade linear(double k);       // k * x, k > 0
  static Regrade power(double p);        // x^p on x > 0, p > 0
  static Regrade exponential(double a);  // exp(a * x), a > 0
  static Regrade logarithmic();          // log(x) on x > 0
  /// Piecewise-linear interpolation through strictly increasing points;
  /// the inverse is found by monotone bisection to 1e-12.
  static Regrade table(std::vector<std::pair<double, double>> points);

  double theta(double x) const;
  double theta_inverse(double y) const;

 private:
  Regrade() = default;
  std::function<double(double)> forward_;
  std::function<double(double)> inverse_;
};

/// Theta^{-1}(Theta(x) + Theta(y)): the combination operator on the regraded
/// scale. Associative and order-preserving in both arguments.
double regrade_combine(double x, double y, const Regrade& theta);

struct FidelityViolation {
  Element lower;
  Element upper;
  double lower_value;
  double upper_value;
};

struct FidelityReport {
  std::size_t pairs_checked = 0;
  std::vector<FidelityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every pair (x, y) with x strictly below y, checks value(x) < value(y).
/// Pairs that are not strictly ordered are skipped.
FidelityReport check_fidelity(
    const Measure& m, const std::vector<std::pair<Element, Element>>& pairs);

}  // namespace li
