#include "li/potential.hpp"

#include <cmath>
#include <string>

namespace li {

namespace {

double xlogx(double x) {
  // x log x -> 0 as x -> 0+; guard the underflow end.
  return x > 0.0 ? x * std::log(x) : 0.0;
}

void require_positive(const std::vector<double>& v, const char* name) {
  for (double x : v) {
    if (!std::isfinite(x) || x <= 0.0) {
      throw DomainError(std::string(name) +
                        " entries must be finite and strictly positive");
    }
  }
}

}  // namespace

double potential_value(const PotentialSpec& spec,
                       const std::vector<double>& m) {
  if (spec.a.size() != m.size() || spec.b.size() != m.size() ||
      spec.c.size() != m.size()) {
    throw DimensionError("potential constants must match the atom count");
  }
  require_positive(m, "measure");
  double h = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    h += spec.a[i] + spec.b[i] * m[i] + spec.c[i] * (xlogx(m[i]) - m[i]);
  }
  return h;
}

double divergence(const std::vector<double>& w, const std::vector<double>& u) {
  if (w.size() != u.size()) {
    throw DimensionError("divergence arguments must have equal length");
  }
  require_positive(w, "destination");
  require_positive(u, "source");
  double h = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += u[i] - w[i] + w[i] * std::log(w[i] / u[i]);
  }
  return h;
}

Distribution::Distribution(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw DomainError("a distribution needs at least one cell");
  double sum = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw DomainError("probabilities must be nonnegative and finite");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("probabilities must sum to 1 (got " +
                      std::to_string(sum) + ")");
  }
}

double information(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionError("information arguments must have equal length");
  }
  double h = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0.0) continue;
    if (q[k] == 0.0) {
      throw InfiniteInformationError(
          "destination has mass where the source vanishes (cell " +
          std::to_string(k) + ")");
    }
    h += p[k] * std::log(p[k] / q[k]);
  }
  return h;
}

double entropy(const Distribution& p) {
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) s -= xlogx(p[k]);
  return s;
}

double check_grouping(double p1, double p2, double p3) {
  const double tail = p2 + p3;
  if (!(tail > 0.0)) {
    throw DegenerateSplitError("subsidiary choice has zero mass");
  }
  const Distribution whole({p1, p2, p3});
  const Distribution coarse({p1, tail});
  const Distribution inner({p2 / tail, p3 / tail});
  return entropy(whole) - (entropy(coarse) + tail * entropy(inner));
}

AsymmetryWitness asymmetry_witness() {
  // One-component measures suffice; search a coarse grid for a triple that
  // breaks both commutativity and the triangle inequality at once.
  for (double uv = 0.5; uv <= 3.0; uv += 0.25) {
    for (double vv = 0.5; vv <= 3.0; vv += 0.25) {
      for (double wv = 0.5; wv <= 3.0; wv += 0.25) {
        AsymmetryWitness cand;
        cand.u = {uv};
        cand.v = {vv};
        cand.w = {wv};
        cand.h_w_from_u = divergence(cand.w, cand.u);
        cand.h_u_from_w = divergence(cand.u, cand.w);
        cand.h_w_from_v = divergence(cand.w, cand.v);
        cand.h_v_from_u = divergence(cand.v, cand.u);
        const bool noncommutative =
            std::abs(cand.h_w_from_u - cand.h_u_from_w) > 1e-6;
        const bool triangle_broken =
            cand.h_w_from_u > cand.h_w_from_v + cand.h_v_from_u + 1e-6;
        if (noncommutative && triangle_broken) return cand;
      }
    }
  }
  throw NumericError("no asymmetry witness found on the search grid");
}

}  // namespace li
