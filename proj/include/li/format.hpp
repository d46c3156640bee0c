#pragma once

#include <string>
#include <vector>

namespace li {

/// Shortest text of x rounded to the given number of significant digits
/// (round-half-even via the platform's correctly rounded conversion).
/// Deterministic for identical inputs.
std::string format_significant(double x, int digits);

/// "[a, b, c]" with each entry formatted as above.
std::string format_array(const std::vector<double>& xs, int digits);

}  // namespace li
