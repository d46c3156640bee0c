#include "li/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace li {

namespace {

// Float pre-filters; anything this close to a tie is settled exactly.
constexpr double kTieEps = 1e-6;
constexpr double kRatioMargin = 1e-7;

SurdValue exact_combo(const std::vector<SurdValue>& values,
                      const std::vector<std::int64_t>& mult) {
  SurdValue v;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] != 0) v += values[i] * Rational(mult[i]);
  }
  return v;
}

void validate_basis(const std::vector<SurdValue>& values,
                    const SurdValue& delta) {
  if (values.empty()) throw DomainError("at least one established type needed");
  for (const auto& v : values) {
    if (v.sign() <= 0) throw DomainError("atom values must be strictly positive");
  }
  if (delta.sign() <= 0) {
    throw DomainError("the new atom's value must be strictly positive");
  }
}

// Preference between witnesses of exactly equal ratio: smaller u first,
// then lexicographically smaller multiplicities. Keeps results independent
// of enumeration order and thread partitioning.
bool canonical_before(std::int64_t u1, const std::vector<std::int64_t>& m1,
                      std::int64_t u2, const std::vector<std::int64_t>& m2) {
  if (u1 != u2) return u1 < u2;
  return m1 < m2;
}

struct SideBest {
  bool found = false;
  double ratio_f = 0.0;
  RatioWitness w;
};

class NarrowWorker {
 public:
  NarrowWorker(const std::vector<SurdValue>& values, const SurdValue& delta,
               std::int64_t max_u, double bound)
      : values_(values), delta_(delta), max_u_(max_u), bound_(bound) {
    vf_.reserve(values.size());
    for (const auto& v : values) vf_.push_back(v.to_double());
    df_ = delta.to_double();
    inv_d_ = 1.0 / df_;
  }

  void run(int worker, int workers) {
    const std::size_t k = vf_.size();
    if (k == 1 && worker != 0) return;  // single dimension: one worker owns it
    std::vector<std::int64_t> mult(k, 0);
    recurse(0, 0.0, mult, worker, workers);
  }

  SideBest lower;
  SideBest upper;
  std::vector<RatioWitness> hits;

 private:
  void recurse(std::size_t dim, double partial,
               std::vector<std::int64_t>& mult, int worker, int workers) {
    if (dim + 1 == vf_.size()) {
      hot_loop(partial, mult);
      return;
    }
    const std::int64_t start = (dim == 0) ? worker : 0;
    const std::int64_t step = (dim == 0) ? workers : 1;
    for (std::int64_t i = start;; i += step) {
      const double p = partial + static_cast<double>(i) * vf_[dim];
      if (p > bound_) break;
      mult[dim] = i;
      recurse(dim + 1, p, mult, worker, workers);
    }
    mult[dim] = 0;
  }

  void hot_loop(double partial, std::vector<std::int64_t>& mult) {
    const std::size_t last = vf_.size() - 1;
    const double v = vf_[last];
    for (std::int64_t t = 0;; ++t) {
      const double value = partial + static_cast<double>(t) * v;
      if (value > bound_) break;
      if (partial == 0.0 && t == 0 && value == 0.0 && all_zero(mult, last)) {
        continue;  // the empty combination is seeded separately
      }
      mult[last] = t;
      consider(mult, value);
    }
    mult[last] = 0;
  }

  static bool all_zero(const std::vector<std::int64_t>& mult,
                       std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
      if (mult[i] != 0) return false;
    }
    return true;
  }

  void consider(const std::vector<std::int64_t>& mult, double value_f) {
    const double q = value_f * inv_d_;
    const double nearest = std::floor(q + 0.5);
    std::int64_t u_below;  // smallest u with value < u * delta
    std::int64_t u_above;  // largest u with value > u * delta
    if (std::abs(q - nearest) < kTieEps) {
      // Near a multiple of delta: settle the ordering exactly.
      const auto r = static_cast<std::int64_t>(nearest);
      const SurdValue exact = exact_combo(values_, mult);
      const int s =
          r == 0 ? exact.sign() : (exact - delta_ * Rational(r)).sign();
      if (s == 0) {
        if (r >= 1 && r <= max_u_) hits.push_back({mult, r, exact});
        u_below = r + 1;
        u_above = r - 1;
      } else if (s < 0) {
        u_below = r;
        u_above = r - 1;
      } else {
        u_below = r + 1;
        u_above = r;
      }
    } else {
      const auto fl = static_cast<std::int64_t>(std::floor(q));
      u_below = fl + 1;
      u_above = fl;
    }
    if (u_below <= max_u_) improve_lower(mult, value_f, u_below);
    const std::int64_t u_c = std::min(u_above, max_u_);
    if (u_c >= 1) improve_upper(mult, value_f, u_c);
  }

  void improve_lower(const std::vector<std::int64_t>& mult, double value_f,
                     std::int64_t u) {
    const double cand = value_f / static_cast<double>(u);
    if (lower.found && cand < lower.ratio_f - kRatioMargin) return;
    SurdValue exact = exact_combo(values_, mult);
    if ((exact - delta_ * Rational(u)).sign() >= 0) return;
    if (lower.found) {
      const int c =
          (exact * Rational(lower.w.u) - lower.w.value * Rational(u)).sign();
      if (c < 0) return;
      if (c == 0 &&
          !canonical_before(u, mult, lower.w.u, lower.w.multiplicities)) {
        return;
      }
    }
    lower.found = true;
    lower.ratio_f = cand;
    lower.w = {mult, u, std::move(exact)};
  }

  void improve_upper(const std::vector<std::int64_t>& mult, double value_f,
                     std::int64_t u) {
    const double cand = value_f / static_cast<double>(u);
    if (upper.found && cand > upper.ratio_f + kRatioMargin) return;
    SurdValue exact = exact_combo(values_, mult);
    if ((exact - delta_ * Rational(u)).sign() <= 0) return;
    if (upper.found) {
      const int c =
          (exact * Rational(upper.w.u) - upper.w.value * Rational(u)).sign();
      if (c > 0) return;
      if (c == 0 &&
          !canonical_before(u, mult, upper.w.u, upper.w.multiplicities)) {
        return;
      }
    }
    upper.found = true;
    upper.ratio_f = cand;
    upper.w = {mult, u, std::move(exact)};
  }

  const std::vector<SurdValue>& values_;
  const SurdValue& delta_;
  std::int64_t max_u_;
  double bound_;
  std::vector<double> vf_;
  double df_ = 0.0;
  double inv_d_ = 0.0;
};

// Exact ratio comparison value1/u1 vs value2/u2.
int ratio_compare(const RatioWitness& a, const RatioWitness& b) {
  return (a.value * Rational(b.u) - b.value * Rational(a.u)).sign();
}

void merge_side(SideBest& into, const SideBest& from, bool lower_side) {
  if (!from.found) return;
  if (!into.found) {
    into = from;
    return;
  }
  const int c = ratio_compare(from.w, into.w);
  const bool better = lower_side ? c > 0 : c < 0;
  const bool tie_preferred =
      c == 0 && canonical_before(from.w.u, from.w.multiplicities, into.w.u,
                                 into.w.multiplicities);
  if (better || tie_preferred) into = from;
}

}  // namespace

SurdValue grid_value(const GridPoint& p,
                     const std::vector<SurdValue>& atom_values,
                     const SurdValue& delta) {
  if (p.multiplicities.size() != atom_values.size()) {
    throw DimensionError("multiplicity list must match the atom-value list");
  }
  SurdValue v = exact_combo(atom_values, p.multiplicities);
  if (p.new_count != 0) v += delta * Rational(p.new_count);
  return v;
}

GridClass classify(const GridPoint& p,
                   const std::vector<SurdValue>& atom_values,
                   const SurdValue& target_old_value, const SurdValue& delta) {
  if (p.multiplicities.size() != atom_values.size()) {
    throw DimensionError("multiplicity list must match the atom-value list");
  }
  if (p.new_count < 1) {
    throw DomainError("classification needs a target multiplicity u >= 1");
  }
  const SurdValue member = exact_combo(atom_values, p.multiplicities);
  const SurdValue target = target_old_value + delta * Rational(p.new_count);
  const int s = (member - target).sign();
  if (s < 0) return GridClass::kBelow;
  if (s == 0) return GridClass::kAt;
  return GridClass::kAbove;
}

bool repetition_check(const GridPoint& member, const GridPoint& target,
                      std::int64_t n, const std::vector<SurdValue>& atom_values,
                      const SurdValue& delta) {
  if (n < 1) throw DomainError("repetition factor must be at least 1");
  const SurdValue target_old = exact_combo(atom_values, target.multiplicities);
  const GridClass base = classify(member, atom_values, target_old, delta);

  GridPoint scaled = member;
  for (auto& m : scaled.multiplicities) m *= n;
  scaled.new_count *= n;
  const GridClass repeated =
      classify(scaled, atom_values, target_old * Rational(n), delta);
  return base == repeated;
}

DeltaBounds narrow_delta(const std::vector<SurdValue>& atom_values,
                         const SurdValue& delta, std::int64_t max_u,
                         int jobs) {
  validate_basis(atom_values, delta);
  if (max_u < 1) throw DomainError("max_u must be at least 1");
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  jobs = std::min(jobs, 64);

  double max_vf = 0.0;
  for (const auto& v : atom_values) max_vf = std::max(max_vf, v.to_double());
  const double bound =
      static_cast<double>(max_u) * delta.to_double() + max_vf + 1.0;

  std::vector<NarrowWorker> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int i = 0; i < jobs; ++i) {
    workers.emplace_back(atom_values, delta, max_u, bound);
  }
  if (jobs == 1) {
    workers[0].run(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) {
      threads.emplace_back([&workers, i, jobs] { workers[i].run(i, jobs); });
    }
    for (auto& t : threads) t.join();
  }

  // The empty combination is always below every target, so the lower side
  // starts at ratio zero.
  SideBest lower;
  lower.found = true;
  lower.ratio_f = 0.0;
  lower.w = {std::vector<std::int64_t>(atom_values.size(), 0), 1, SurdValue()};
  SideBest upper;
  std::vector<RatioWitness> hits;
  for (const auto& w : workers) {
    merge_side(lower, w.lower, /*lower_side=*/true);
    merge_side(upper, w.upper, /*lower_side=*/false);
    hits.insert(hits.end(), w.hits.begin(), w.hits.end());
  }

  DeltaBounds out;
  if (!hits.empty()) {
    const auto best = std::min_element(
        hits.begin(), hits.end(), [](const RatioWitness& a, const RatioWitness& b) {
          return canonical_before(a.u, a.multiplicities, b.u, b.multiplicities);
        });
    out.exact = *best;
    return out;
  }
  if (!upper.found) {
    throw UnboundedSideError(
        "no set-C member within the search bound; delta lies above all grid "
        "ratios");
  }
  out.lower = lower.w;
  out.upper = upper.w;
  out.lower_decimal = (out.lower.value * Rational(1, out.lower.u))
                          .decimal(12, DecimalRounding::kDown);
  out.upper_decimal = (out.upper.value * Rational(1, out.upper.u))
                          .decimal(12, DecimalRounding::kUp);
  return out;
}

std::vector<IntervalRow> interval_table(
    const std::vector<SurdValue>& atom_values, const SurdValue& delta,
    const std::vector<std::int64_t>& u_list) {
  validate_basis(atom_values, delta);
  if (u_list.empty()) throw DomainError("at least one multiplicity needed");
  for (std::int64_t u : u_list) {
    if (u < 1) throw DomainError("multiplicities must be at least 1");
  }

  struct Working {
    bool lower_found = false;
    double lower_f = 0.0;
    SurdValue lower;
    std::vector<std::int64_t> lower_mult;
    bool upper_found = false;
    double upper_f = 0.0;
    SurdValue upper;
    std::vector<std::int64_t> upper_mult;
    bool exact_found = false;
    SurdValue exact;
    std::vector<std::int64_t> exact_mult;
  };

  const std::int64_t max_u = *std::max_element(u_list.begin(), u_list.end());
  std::vector<double> vf;
  for (const auto& v : atom_values) vf.push_back(v.to_double());
  const double min_vf = *std::min_element(vf.begin(), vf.end());
  const double df = delta.to_double();
  const double bound = static_cast<double>(max_u) * df + min_vf + 1.0;

  std::vector<std::int64_t> sorted_u(u_list);
  std::sort(sorted_u.begin(), sorted_u.end());
  sorted_u.erase(std::unique(sorted_u.begin(), sorted_u.end()), sorted_u.end());
  std::map<std::int64_t, Working> work;
  for (std::int64_t u : sorted_u) {
    Working w;
    // The empty combination sits below every positive target.
    w.lower_found = true;
    w.lower_f = 0.0;
    w.lower_mult.assign(atom_values.size(), 0);
    work.emplace(u, std::move(w));
  }

  // Enumerate every grid point under the bound and push it at each target.
  std::vector<std::int64_t> mult(atom_values.size(), 0);
  const std::size_t k = atom_values.size();
  auto visit = [&](double value_f) {
    for (auto& [u, w] : work) {
      const double target_f = static_cast<double>(u) * df;
      int side;  // -1 below, 0 at, +1 above
      if (std::abs(value_f - target_f) < kTieEps * (1.0 + target_f)) {
        side = (exact_combo(atom_values, mult) - delta * Rational(u)).sign();
      } else {
        side = value_f < target_f ? -1 : 1;
      }
      if (side == 0) {
        SurdValue exact = exact_combo(atom_values, mult);
        if (!w.exact_found || mult < w.exact_mult) {
          w.exact_found = true;
          w.exact = std::move(exact);
          w.exact_mult = mult;
        }
      } else if (side < 0) {
        if (w.lower_found && value_f < w.lower_f - kTieEps * (1.0 + target_f))
          continue;
        SurdValue exact = exact_combo(atom_values, mult);
        const int c = w.lower_found ? (exact - w.lower).sign() : 1;
        if (c > 0 || (c == 0 && mult < w.lower_mult)) {
          w.lower_found = true;
          w.lower_f = value_f;
          w.lower = std::move(exact);
          w.lower_mult = mult;
        }
      } else {
        if (w.upper_found && value_f > w.upper_f + kTieEps * (1.0 + target_f))
          continue;
        SurdValue exact = exact_combo(atom_values, mult);
        const int c = w.upper_found ? (exact - w.upper).sign() : -1;
        if (c < 0 || (c == 0 && mult < w.upper_mult)) {
          w.upper_found = true;
          w.upper_f = value_f;
          w.upper = std::move(exact);
          w.upper_mult = mult;
        }
      }
    }
  };

  auto enumerate = [&](auto&& self, std::size_t dim, double partial) -> void {
    if (dim + 1 == k) {
      for (std::int64_t t = 0;; ++t) {
        const double value = partial + static_cast<double>(t) * vf[dim];
        if (value > bound) break;
        if (partial == 0.0 && t == 0) continue;  // skip the empty combination
        mult[dim] = t;
        visit(value);
      }
      mult[dim] = 0;
      return;
    }
    for (std::int64_t i = 0;; ++i) {
      const double p = partial + static_cast<double>(i) * vf[dim];
      if (p > bound) break;
      mult[dim] = i;
      self(self, dim + 1, p);
    }
    mult[dim] = 0;
  };
  enumerate(enumerate, 0, 0.0);

  std::vector<IntervalRow> rows;
  rows.reserve(u_list.size());
  for (std::int64_t u : u_list) {
    const Working& w = work.at(u);
    IntervalRow row;
    row.u = u;
    if (w.exact_found) {
      row.exact = true;
      row.lower = w.exact;
      row.upper = w.exact;
      row.lower_multiplicities = w.exact_mult;
      row.upper_multiplicities = w.exact_mult;
    } else {
      if (!w.upper_found) {
        throw UnboundedSideError("no grid value above target " +
                                 std::to_string(u) + " within the bound");
      }
      row.lower = w.lower;
      row.upper = w.upper;
      row.lower_multiplicities = w.lower_mult;
      row.upper_multiplicities = w.upper_mult;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string combo_string(const std::vector<std::int64_t>& multiplicities) {
  std::string out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const std::int64_t m = multiplicities[i];
    if (m == 0) continue;
    if (!out.empty()) out += "+";
    if (m != 1) out += std::to_string(m);
    if (i < 26) {
      out += static_cast<char>('a' + i);
    } else {
      out += "t" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

OpTable OpTable::addition() {
  OpTable t;
  t.rule_ = Rule::kAddition;
  t.name_ = "addition";
  return t;
}

OpTable OpTable::floor_left() {
  OpTable t;
  t.rule_ = Rule::kFloorLeft;
  t.name_ = "floor-left";
  return t;
}

OpTable OpTable::floor_right() {
  OpTable t;
  t.rule_ = Rule::kFloorRight;
  t.name_ = "floor-right";
  return t;
}

OpTable OpTable::sum_of_squares() {
  OpTable t;
  t.rule_ = Rule::kSumOfSquares;
  t.name_ = "sum-of-squares";
  return t;
}

OpTable OpTable::max() {
  OpTable t;
  t.rule_ = Rule::kMax;
  t.name_ = "max";
  return t;
}

OpTable OpTable::from_table(std::vector<double> samples,
                            std::vector<std::vector<double>> values) {
  if (values.size() != samples.size()) {
    throw DimensionError("operator table must be square over the samples");
  }
  for (const auto& row : values) {
    if (row.size() != samples.size()) {
      throw DimensionError("operator table must be square over the samples");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw DomainError("non-finite operator table entry");
    }
  }
  OpTable t;
  t.rule_ = Rule::kTable;
  t.name_ = "table";
  t.samples_ = std::move(samples);
  t.table_ = std::move(values);
  return t;
}

double OpTable::apply(double a, double b) const {
  switch (rule_) {
    case Rule::kAddition:
      return a + b;
    case Rule::kFloorLeft:
      return std::floor(a) + b;
    case Rule::kFloorRight:
      return a + std::floor(b);
    case Rule::kSumOfSquares:
      return a * a + b * b;
    case Rule::kMax:
      return std::max(a, b);
    case Rule::kTable: {
      auto index_of = [this](double x) -> std::size_t {
        for (std::size_t i = 0; i < samples_.size(); ++i) {
          if (std::abs(samples_[i] - x) <= 1e-12 * std::max(1.0, std::abs(x))) {
            return i;
          }
        }
        throw DomainError("value outside the sampled operator domain");
      };
      return table_[index_of(a)][index_of(b)];
    }
  }
  throw DomainError("unknown operator rule");
}

bool OpTable::closed_over(const std::vector<double>& samples) const {
  try {
    for (double a : samples) {
      for (double b : samples) {
        apply(a, b);
      }
    }
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

AxiomReport axiom_check(const OpTable& op, const std::vector<double>& samples) {
  std::vector<double> s(samples);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 3) {
    throw DomainError("axiom check needs at least 3 distinct samples");
  }

  AxiomReport report;
  auto near = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  };

  for (std::size_t i = 0; i < s.size() && report.axiom1a.passed; ++i) {
    for (std::size_t j = i + 1; j < s.size() && report.axiom1a.passed; ++j) {
      for (double z : s) {
        const double lhs = op.apply(s[i], z);
        const double rhs = op.apply(s[j], z);
        if (!(lhs < rhs)) {
          report.axiom1a.passed = false;
          report.axiom1a.witness = {s[i], s[j], z, lhs, rhs};
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < s.size() && report.axiom1b.passed; ++i) {
    for (std::size_t j = i + 1; j < s.size() && report.axiom1b.passed; ++j) {
      for (double z : s) {
        const double lhs = op.apply(z, s[i]);
        const double rhs = op.apply(z, s[j]);
        if (!(lhs < rhs)) {
          report.axiom1b.passed = false;
          report.axiom1b.witness = {s[i], s[j], z, lhs, rhs};
          break;
        }
      }
    }
  }

  for (double x : s) {
    if (!report.axiom2.passed) break;
    for (double y : s) {
      if (!report.axiom2.passed) break;
      for (double z : s) {
        double lhs;
        double rhs;
        try {
          lhs = op.apply(op.apply(x, y), z);
          rhs = op.apply(x, op.apply(y, z));
        } catch (const DomainError&) {
          ++report.axiom2_skipped;  // table op not closed at this triple
          continue;
        }
        if (!near(lhs, rhs)) {
          report.axiom2.passed = false;
          report.axiom2.witness = {x, y, z, lhs, rhs};
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace li
