#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "li/surd.hpp"

namespace li {

/// Multiplicities of the established atom types plus a count of the new type.
struct GridPoint {
  std::vector<std::int64_t> multiplicities;
  std::int64_t new_count = 0;  // u

  bool operator==(const GridPoint& other) const = default;
};

/// Exact value of a grid point: sum_i multiplicities[i] * atom_values[i]
/// plus new_count * delta.
SurdValue grid_value(const GridPoint& p,
                     const std::vector<SurdValue>& atom_values,
                     const SurdValue& delta);

/// Side of a grid comparison: the established-type value of the member lies
/// below (A), at (B), or above (C) the target old-combo value plus u copies
/// of the new atom.
enum class GridClass { kBelow, kAt, kAbove };

/// Classifies member p (whose new_count is the target multiplicity u >= 1)
/// against target_old_value + u * delta, by exact comparison.
GridClass classify(const GridPoint& p,
                   const std::vector<SurdValue>& atom_values,
                   const SurdValue& target_old_value, const SurdValue& delta);

/// The repetition lemma: scaling member and target by n leaves the
/// classification unchanged. Returns whether the two classifications agree.
bool repetition_check(const GridPoint& member, const GridPoint& target,
                      std::int64_t n, const std::vector<SurdValue>& atom_values,
                      const SurdValue& delta);

/// A bound achieved by a grid point: the ratio value / u.
struct RatioWitness {
  std::vector<std::int64_t> multiplicities;
  std::int64_t u = 0;
  SurdValue value;  // established-type part only
};

struct DeltaBounds {
  /// Set when some grid value equals u * delta exactly: the new atom's value
  /// is then pinned with an equality certificate and no interval remains.
  std::optional<RatioWitness> exact;

  RatioWitness lower;  // supremum of set-A ratios, u <= max_u
  RatioWitness upper;  // infimum of set-C ratios, u <= max_u
  std::string lower_decimal;  // 12 places, rounded down (enclosure endpoint)
  std::string upper_decimal;  // 12 places, rounded up
};

/// Narrows the admissible interval for the new atom's value by enumerating
/// every grid point with value below max_u * delta + max(atom_values) and
/// taking, per point, the best multiplicity u: floor(value/delta) + 1 for the
/// lower side and the largest u <= max_u with value/u > delta for the upper
/// side, with exact arithmetic settling everything near a tie. delta itself
/// enters only through order comparisons, mirroring its role as an ordering
/// oracle. With jobs > 1 the outermost multiplicity range is partitioned
/// across threads; the reduction is exact, so the result does not depend on
/// the partitioning.
DeltaBounds narrow_delta(const std::vector<SurdValue>& atom_values,
                         const SurdValue& delta, std::int64_t max_u,
                         int jobs = 1);

struct IntervalRow {
  std::int64_t u = 0;
  bool exact = false;          // grid value equal to u * delta found
  SurdValue lower;             // largest grid value below u * delta
  SurdValue upper;             // smallest grid value above u * delta
  std::vector<std::int64_t> lower_multiplicities;
  std::vector<std::int64_t> upper_multiplicities;
};

/// Per-u constraints: the tightest established-grid values bracketing
/// u * delta. An exact hit is reported in both fields with exact = true.
std::vector<IntervalRow> interval_table(
    const std::vector<SurdValue>& atom_values, const SurdValue& delta,
    const std::vector<std::int64_t>& u_list);

/// Renders multiplicities as a combination over type letters, "8a+7c".
std::string combo_string(const std::vector<std::int64_t>& multiplicities);

/// A binary operation on reals used to probe the quantification axioms.
class OpTable {
 public:
  static OpTable addition();
  static OpTable floor_left();      // floor(a) + b
  static OpTable floor_right();     // a + floor(b)
  static OpTable sum_of_squares();  // a^2 + b^2
  static OpTable max();
  /// Explicit value table over a fixed sample set; total on that domain.
  static OpTable from_table(std::vector<double> samples,
                            std::vector<std::vector<double>> values);

  double apply(double a, double b) const;
  /// False iff apply would fail on some pair drawn from the samples
  /// (only possible for table-backed operations).
  bool closed_over(const std::vector<double>& samples) const;

  const std::string& name() const { return name_; }

 private:
  OpTable() = default;
  enum class Rule { kAddition, kFloorLeft, kFloorRight, kSumOfSquares, kMax, kTable };
  Rule rule_ = Rule::kAddition;
  std::string name_;
  std::vector<double> samples_;
  std::vector<std::vector<double>> table_;
};

struct AxiomWitness {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AxiomCheckResult {
  bool passed = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  AxiomCheckResult axiom1a;  // x < y implies x o z < y o z
  AxiomCheckResult axiom1b;  // x < y implies z o x < z o y
  AxiomCheckResult axiom2;   // (x o y) o z == x o (y o z)
  std::size_t axiom2_skipped = 0;  // triples with intermediates outside a table domain
};

/// Exhaustively tests the order axioms and associativity over the sample set;
/// reports the first witness per failing axiom.
AxiomReport axiom_check(const OpTable& op, const std::vector<double>& samples);

}  // namespace li
