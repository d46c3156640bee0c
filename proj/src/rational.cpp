#include "li/rational.hpp"

#include <cctype>

namespace li {

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_text(text)) {
      throw DomainError("not a rational literal: '" + text + "'");
    }
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw DomainError("not a rational literal: '" + text + "'");
  }
  BigInt d(den);
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace li
