#pragma once

#include <utility>
#include <vector>

#include "li/measure.hpp"

namespace li {

/// Probability of a predicate within a context, computed lazily as the ratio
/// m(x ^ t) / m(t). The context must not be bottom.
class Bivaluation {
 public:
  Bivaluation(Measure measure, Element context);

  const Measure& measure() const { return measure_; }
  const Element& context() const { return context_; }

  double probability(const Element& predicate) const;

 private:
  Measure measure_;
  Element context_;
};

double probability(const Bivaluation& b, const Element& x);

/// p(x|z) - p(x|y) p(y|z) on a chain x <= y <= z; zero up to rounding.
double check_chain_product(const Measure& m, const Element& x,
                           const Element& y, const Element& z);

/// Returns the pair (p(a^b|c), p(a|b^c) p(b|c)); equal up to rounding.
std::pair<double, double> general_product(const Measure& m, const Element& a,
                                          const Element& b, const Element& c);

struct BayesResult {
  std::vector<double> posterior;
  double evidence = 0.0;
};

/// Table form of Bayes' theorem: posterior_i proportional to
/// likelihood[datum][i] * prior_i. The prior must sum to one (tolerance 1e-9)
/// and evidence must be positive.
BayesResult bayes(const std::vector<double>& prior,
                  const std::vector<std::vector<double>>& likelihood,
                  std::size_t datum);

}  // namespace li
