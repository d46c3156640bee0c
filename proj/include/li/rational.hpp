#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "li/errors.hpp"

namespace li {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" (q > 0 after normalization).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

}  // namespace li
