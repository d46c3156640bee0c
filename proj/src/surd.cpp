#include "li/surd.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace li {

namespace {

constexpr int kStartBits = 64;
constexpr int kMaxBits = 1 << 20;

BigInt pow10(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0 assumed.
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// floor(sqrt(r) * 2^bits), cached per (radicand, bits). Sign evaluation and
// decimal rendering hit the same few radicands over and over.
const BigInt& scaled_sqrt(std::uint64_t radicand, int bits) {
  thread_local std::map<std::pair<std::uint64_t, int>, BigInt> cache;
  auto key = std::make_pair(radicand, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigInt arg = BigInt(radicand) << (2 * bits);
  return cache.emplace(key, integer_sqrt(arg)).first->second;
}

// Reduces n = s^2 * r with r squarefree; returns (s, r).
std::pair<std::uint64_t, std::uint64_t> reduce_radicand(std::uint64_t n) {
  std::uint64_t s = 1;
  std::uint64_t r = n;
  for (std::uint64_t d = 2; d * d <= r; ++d) {
    const std::uint64_t dd = d * d;
    while (r % dd == 0) {
      r /= dd;
      s *= d;
    }
  }
  return {s, r};
}

}  // namespace

BigInt integer_sqrt(const BigInt& n) {
  if (n < 0) throw DomainError("integer_sqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

SurdValue SurdValue::rational(const Rational& q) {
  SurdValue v;
  v.add_term(1, q);
  return v;
}

SurdValue SurdValue::integer(long long n) { return rational(Rational(n)); }

SurdValue SurdValue::sqrt_of(std::uint64_t n) {
  return term(Rational(1), n);
}

SurdValue SurdValue::term(const Rational& q, std::uint64_t n) {
  SurdValue v;
  if (q == 0) return v;
  if (n == 0) return v;  // sqrt(0) contributes nothing
  auto [s, r] = reduce_radicand(n);
  v.add_term(r, q * Rational(s));
  return v;
}

void SurdValue::add_term(std::uint64_t radicand, const Rational& q) {
  if (q == 0) return;
  auto it = coeffs_.find(radicand);
  if (it == coeffs_.end()) {
    coeffs_.emplace(radicand, q);
    return;
  }
  it->second += q;
  if (it->second == 0) coeffs_.erase(it);
}

bool SurdValue::is_rational() const {
  if (coeffs_.empty()) return true;
  return coeffs_.size() == 1 && coeffs_.begin()->first == 1;
}

Rational SurdValue::rational_part() const {
  auto it = coeffs_.find(1);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

SurdValue SurdValue::operator+(const SurdValue& other) const {
  SurdValue out = *this;
  out += other;
  return out;
}

SurdValue SurdValue::operator-(const SurdValue& other) const {
  SurdValue out = *this;
  out -= other;
  return out;
}

SurdValue SurdValue::operator-() const {
  SurdValue out;
  for (const auto& [r, q] : coeffs_) out.coeffs_.emplace(r, -q);
  return out;
}

SurdValue SurdValue::operator*(const Rational& scale) const {
  SurdValue out;
  if (scale == 0) return out;
  for (const auto& [r, q] : coeffs_) out.coeffs_.emplace(r, q * scale);
  return out;
}

SurdValue SurdValue::operator*(const SurdValue& other) const {
  SurdValue out;
  for (const auto& [r1, q1] : coeffs_) {
    for (const auto& [r2, q2] : other.coeffs_) {
      // Radicands are squarefree, so r1 r2 = g^2 (r1/g)(r2/g) with
      // g = gcd(r1, r2), and the coprime cofactor product is squarefree.
      const std::uint64_t g = std::gcd(r1, r2);
      const std::uint64_t c1 = r1 / g;
      const std::uint64_t c2 = r2 / g;
      if (c2 != 0 && c1 > std::numeric_limits<std::uint64_t>::max() / c2) {
        throw NumericError("radicand overflow in surd multiplication");
      }
      out.add_term(c1 * c2, q1 * q2 * Rational(g));
    }
  }
  return out;
}

SurdValue& SurdValue::operator+=(const SurdValue& other) {
  for (const auto& [r, q] : other.coeffs_) add_term(r, q);
  return *this;
}

SurdValue& SurdValue::operator-=(const SurdValue& other) {
  for (const auto& [r, q] : other.coeffs_) add_term(r, -q);
  return *this;
}

namespace {

// Interval enclosure of (value * scale) in fixed point: returns [lo, hi]
// as integers carrying an implicit factor 2^-bits.
struct FixedInterval {
  BigInt lo;
  BigInt hi;
};

FixedInterval enclose(const std::map<std::uint64_t, Rational>& coeffs,
                      const BigInt& scale, int bits) {
  FixedInterval out{0, 0};
  for (const auto& [r, q] : coeffs) {
    const BigInt num = numerator(q) * scale;
    const BigInt den = denominator(q);
    if (r == 1) {
      const BigInt exact = num << bits;
      out.lo += floor_div(exact, den);
      out.hi += ceil_div(exact, den);
      continue;
    }
    const BigInt& s = scaled_sqrt(r, bits);  // s <= sqrt(r) 2^bits < s + 1
    if (num >= 0) {
      out.lo += floor_div(num * s, den);
      out.hi += ceil_div(num * (s + 1), den);
    } else {
      out.lo += floor_div(num * (s + 1), den);
      out.hi += ceil_div(num * s, den);
    }
  }
  return out;
}

BigInt round_rational(const Rational& x, DecimalRounding mode) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  switch (mode) {
    case DecimalRounding::kDown:
      return floor_div(num, den);
    case DecimalRounding::kUp:
      return ceil_div(num, den);
    case DecimalRounding::kNearestEven: {
      const BigInt fl = floor_div(num, den);
      const BigInt rem2 = (num - fl * den) * 2;  // 2 * fractional part * den
      if (rem2 > den) return fl + 1;
      if (rem2 < den) return fl;
      return (fl % 2 == 0) ? fl : fl + 1;
    }
  }
  throw DomainError("unknown rounding mode");
}

std::string format_scaled(const BigInt& n, int places) {
  const bool negative = n < 0;
  std::string digits = (negative ? BigInt(-n) : n).str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  if (places == 0) return out + digits;
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  out += ".";
  out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

}  // namespace

int SurdValue::sign() const {
  if (coeffs_.empty()) return 0;
  if (is_rational()) {
    const Rational& q = coeffs_.begin()->second;
    return q > 0 ? 1 : -1;
  }
  for (int bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const FixedInterval iv = enclose(coeffs_, 1, bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
  // Unreachable for reduced radicands: distinct squarefree square roots are
  // linearly independent over the rationals, so a nonzero combination is
  // bounded away from zero.
  throw NumericError("sign of surd value undecided at maximum precision");
}

double SurdValue::to_double() const {
  if (coeffs_.empty()) return 0.0;
  const int bits = 128;
  const FixedInterval iv = enclose(coeffs_, 1, bits);
  return std::ldexp(iv.lo.convert_to<double>(), -bits);
}

std::string SurdValue::decimal(int places, DecimalRounding mode) const {
  if (places < 0) throw DomainError("negative decimal places");
  const BigInt scale = pow10(places);
  if (is_rational()) {
    return format_scaled(round_rational(rational_part() * Rational(scale), mode),
                         places);
  }
  for (int bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const FixedInterval iv = enclose(coeffs_, scale, bits);
    BigInt cand_lo;
    BigInt cand_hi;
    switch (mode) {
      case DecimalRounding::kDown:
        cand_lo = floor_div(iv.lo, BigInt(1) << bits);
        cand_hi = floor_div(iv.hi, BigInt(1) << bits);
        break;
      case DecimalRounding::kUp:
        cand_lo = ceil_div(iv.lo, BigInt(1) << bits);
        cand_hi = ceil_div(iv.hi, BigInt(1) << bits);
        break;
      case DecimalRounding::kNearestEven: {
        // floor(x + 1/2); a tie would need the scaled value to be a
        // half-integer, impossible for an irrational value.
        const BigInt off = BigInt(1) << (bits - 1);
        cand_lo = floor_div(iv.lo + off, BigInt(1) << bits);
        cand_hi = floor_div(iv.hi + off, BigInt(1) << bits);
        break;
      }
    }
    if (cand_lo == cand_hi) return format_scaled(cand_lo, places);
  }
  throw NumericError("decimal rendering undecided at maximum precision");
}

std::string SurdValue::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, q] : coeffs_) {
    std::string mag = rational_to_string(q < 0 ? Rational(-q) : q);
    std::string piece;
    if (r == 1) {
      piece = mag;
    } else if (mag == "1") {
      piece = "sqrt(" + std::to_string(r) + ")";
    } else {
      piece = mag + "*sqrt(" + std::to_string(r) + ")";
    }
    if (first) {
      out += (q < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (q < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace li
