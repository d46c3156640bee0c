#include "li/probability.hpp"

#include <cmath>
#include <string>

namespace li {

namespace {

void require_usable_context(const Measure& m, const Element& t,
                            const char* role) {
  if (t.empty()) {
    throw UndefinedContextError(std::string(role) +
                                " is the bottom element; conditioning on "
                                "nothing is undefined");
  }
  if (!(m.value(t) > 0.0)) {
    throw UndefinedContextError(std::string(role) + " has zero measure");
  }
}

}  // namespace

Bivaluation::Bivaluation(Measure measure, Element context)
    : measure_(std::move(measure)), context_(std::move(context)) {
  if (context_.atom_count() != measure_.lattice().atom_count()) {
    throw DimensionError("context does not belong to the measure's lattice");
  }
  require_usable_context(measure_, context_, "context");
}

double Bivaluation::probability(const Element& predicate) const {
  return measure_.value(meet(predicate, context_)) / measure_.value(context_);
}

double probability(const Bivaluation& b, const Element& x) {
  return b.probability(x);
}

double check_chain_product(const Measure& m, const Element& x,
                           const Element& y, const Element& z) {
  if (!leq(x, y) || !leq(y, z)) {
    throw DomainError("chain-product check needs a chain x <= y <= z");
  }
  require_usable_context(m, y, "middle context");
  require_usable_context(m, z, "outer context");
  const double lhs = m.value(meet(x, z)) / m.value(z);
  const double rhs =
      (m.value(meet(x, y)) / m.value(y)) * (m.value(meet(y, z)) / m.value(z));
  return lhs - rhs;
}

std::pair<double, double> general_product(const Measure& m, const Element& a,
                                          const Element& b, const Element& c) {
  require_usable_context(m, c, "conditioning element");
  const Element bc = meet(b, c);
  require_usable_context(m, bc, "conditioning element b^c");
  const double lhs = m.value(meet(meet(a, b), c)) / m.value(c);
  const double rhs =
      (m.value(meet(a, bc)) / m.value(bc)) * (m.value(bc) / m.value(c));
  return {lhs, rhs};
}

BayesResult bayes(const std::vector<double>& prior,
                  const std::vector<std::vector<double>>& likelihood,
                  std::size_t datum) {
  if (datum >= likelihood.size()) {
    throw DomainError("datum index out of range");
  }
  const std::vector<double>& row = likelihood[datum];
  if (row.size() != prior.size()) {
    throw DimensionError("likelihood row length must match the prior");
  }
  double prior_sum = 0.0;
  for (double p : prior) {
    if (!std::isfinite(p) || p < 0.0) {
      throw DomainError("prior entries must be nonnegative and finite");
    }
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > 1e-9) {
    throw DomainError("prior must sum to 1 (got " + std::to_string(prior_sum) +
                      ")");
  }
  for (const auto& r : likelihood) {
    for (double v : r) {
      if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("likelihood entries must be nonnegative and finite");
      }
    }
  }

  BayesResult result;
  result.posterior.resize(prior.size());
  double evidence = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    evidence += row[i] * prior[i];
  }
  if (!(evidence > 0.0)) {
    throw ImpossibleDatumError(
        "observed datum has zero evidence under every hypothesis");
  }
  for (std::size_t i = 0; i < prior.size(); ++i) {
    result.posterior[i] = row[i] * prior[i] / evidence;
  }
  result.evidence = evidence;
  return result;
}

}  // namespace li
