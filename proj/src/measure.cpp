#include "li/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace li {

Measure::Measure(Lattice lattice, std::vector<double> atom_values)
    : lattice_(std::move(lattice)), atom_values_(std::move(atom_values)) {
  if (atom_values_.size() != lattice_.atom_count()) {
    throw DimensionError("measure needs one value per atom (" +
                         std::to_string(lattice_.atom_count()) + " expected, " +
                         std::to_string(atom_values_.size()) + " given)");
  }
  for (std::size_t i = 0; i < atom_values_.size(); ++i) {
    if (!std::isfinite(atom_values_[i]) || atom_values_[i] <= 0.0) {
      throw DomainError("atom '" + lattice_.atom_labels()[i] +
                        "' must carry a finite, strictly positive value");
    }
  }
}

double Measure::value(const Element& x) const {
  if (x.atom_count() != lattice_.atom_count()) {
    throw DimensionError("element does not belong to this measure's lattice");
  }
  double sum = 0.0;
  for (std::size_t i : x.atoms()) sum += atom_values_[i];
  return sum;
}

double check_inclusion_exclusion(const Measure& m, const Element& x,
                                 const Element& y) {
  return m.value(join(x, y)) + m.value(meet(x, y)) - m.value(x) - m.value(y);
}

Measure product_measure(const Measure& m1, const Measure& m2,
                        const ProductLattice& product) {
  if (!m1.lattice().same_shape(product.left()) ||
      !m2.lattice().same_shape(product.right())) {
    throw DimensionError("factor measures do not match the product's factors");
  }
  const std::size_t n = product.left().atom_count();
  const std::size_t m = product.right().atom_count();
  std::vector<double> values(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      values[product.index_of(i, j)] =
          m1.atom_values()[i] * m2.atom_values()[j];
    }
  }
  return Measure(product.composite(), std::move(values));
}

double Regrade::theta(double x) const { return forward_(x); }
double Regrade::theta_inverse(double y) const { return inverse_(y); }

Regrade Regrade::identity() {
  Regrade r;
  r.forward_ = [](double x) { return x; };
  r.inverse_ = [](double y) { return y; };
  return r;
}

Regrade Regrade::linear(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("linear regrade needs K > 0");
  }
  Regrade r;
  r.forward_ = [k](double x) { return k * x; };
  r.inverse_ = [k](double y) { return y / k; };
  return r;
}

Regrade Regrade::power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("power regrade needs p > 0");
  }
  Regrade r;
  r.forward_ = [p](double x) {
    if (!(x > 0.0)) throw DomainError("power regrade is defined for x > 0");
    return std::pow(x, p);
  };
  r.inverse_ = [p](double y) {
    if (!(y > 0.0)) throw DomainError("power regrade inverse needs y > 0");
    return std::pow(y, 1.0 / p);
  };
  return r;
}

Regrade Regrade::exponential(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("exponential regrade needs a > 0");
  }
  Regrade r;
  r.forward_ = [a](double x) { return std::exp(a * x); };
  r.inverse_ = [a](double y) {
    if (!(y > 0.0)) throw DomainError("exponential regrade inverse needs y > 0");
    return std::log(y) / a;
  };
  return r;
}

Regrade Regrade::logarithmic() {
  Regrade r;
  r.forward_ = [](double x) {
    if (!(x > 0.0)) throw DomainError("logarithmic regrade is defined for x > 0");
    return std::log(x);
  };
  r.inverse_ = [](double y) { return std::exp(y); };
  return r;
}

Regrade Regrade::table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw DomainError("table regrade needs at least two points");
  }
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].first < points[i].first) ||
        !(points[i - 1].second < points[i].second)) {
      throw DomainError("table regrade must be strictly increasing");
    }
  }
  auto interp = [points](double x) {
    if (x < points.front().first || x > points.back().first) {
      throw DomainError("value outside the table regrade's domain");
    }
    auto it = std::lower_bound(
        points.begin(), points.end(), x,
        [](const std::pair<double, double>& p, double v) { return p.first < v; });
    if (it == points.begin()) return points.front().second;
    auto hi = *it;
    auto lo = *(it - 1);
    const double t = (x - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
  };
  auto inverse = [points, interp](double y) {
    if (y < points.front().second || y > points.back().second) {
      throw DomainError("value outside the table regrade's range");
    }
    double lo = points.front().first;
    double hi = points.back().first;
    // Monotone bisection; the interpolant is strictly increasing.
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(hi) + std::abs(lo))) {
      const double mid = 0.5 * (lo + hi);
      if (interp(mid) < y) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  Regrade r;
  r.forward_ = interp;
  r.inverse_ = inverse;
  return r;
}

double regrade_combine(double x, double y, const Regrade& theta) {
  return theta.theta_inverse(theta.theta(x) + theta.theta(y));
}

FidelityReport check_fidelity(
    const Measure& m, const std::vector<std::pair<Element, Element>>& pairs) {
  FidelityReport report;
  for (const auto& [x, y] : pairs) {
    const bool strict = leq(x, y) && !(x == y);
    if (!strict) continue;
    ++report.pairs_checked;
    const double vx = m.value(x);
    const double vy = m.value(y);
    if (!(vx < vy)) {
      report.violations.push_back({x, y, vx, vy});
    }
  }
  return report;
}

}  // namespace li
