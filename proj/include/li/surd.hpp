#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "li/rational.hpp"

namespace li {

enum class DecimalRounding { kDown, kUp, kNearestEven };

/// An exact number of the form sum_r q_r sqrt(r) over squarefree positive
/// integer radicands r (r = 1 carries the rational part). Radicands are
/// reduced on entry (sqrt 12 becomes 2 sqrt 3), so distinct keys are linearly
/// independent over the rationals and equality is coefficient equality.
///
/// The sign of a nonzero value is decided by evaluating each sqrt in integer
/// fixed point to a directed error bound, escalating the working precision
/// until the enclosing interval excludes zero. Independence guarantees the
/// escalation terminates.
class SurdValue {
 public:
  SurdValue() = default;  // zero

  static SurdValue rational(const Rational& q);
  static SurdValue integer(long long n);
  /// sqrt(n) for n >= 0, reduced to q * sqrt(squarefree).
  static SurdValue sqrt_of(std::uint64_t n);
  /// q * sqrt(n), reduced.
  static SurdValue term(const Rational& q, std::uint64_t n);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  /// The rational part; exact only when is_rational().
  Rational rational_part() const;

  const std::map<std::uint64_t, Rational>& coefficients() const {
    return coeffs_;
  }

  SurdValue operator+(const SurdValue& other) const;
  SurdValue operator-(const SurdValue& other) const;
  SurdValue operator-() const;
  SurdValue operator*(const Rational& scale) const;
  SurdValue operator*(const SurdValue& other) const;

  SurdValue& operator+=(const SurdValue& other);
  SurdValue& operator-=(const SurdValue& other);

  bool operator==(const SurdValue& other) const {
    return coeffs_ == other.coeffs_;
  }

  /// -1, 0, or +1.
  int sign() const;

  int compare(const SurdValue& other) const { return (*this - other).sign(); }
  bool operator<(const SurdValue& other) const { return compare(other) < 0; }
  bool operator>(const SurdValue& other) const { return compare(other) > 0; }
  bool operator<=(const SurdValue& other) const { return compare(other) <= 0; }
  bool operator>=(const SurdValue& other) const { return compare(other) >= 0; }

  /// Nearest double (correct to about 1 ulp).
  double to_double() const;

  /// Fixed-point decimal with the given number of places after the point.
  /// kDown/kUp round toward minus/plus infinity (enclosure endpoints);
  /// kNearestEven is round-half-even.
  std::string decimal(int places, DecimalRounding mode) const;

  /// Exact symbolic rendering like "3/2 + 2*sqrt(5)"; for diagnostics.
  std::string to_string() const;

 private:
  void add_term(std::uint64_t radicand, const Rational& q);

  std::map<std::uint64_t, Rational> coeffs_;
};

/// floor(sqrt(n)) for big integers (n >= 0).
BigInt integer_sqrt(const BigInt& n);

}  // namespace li
