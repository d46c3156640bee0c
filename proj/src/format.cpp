#include "li/format.hpp"

#include <cmath>
#include <cstdio>

namespace li {

std::string format_significant(double x, int digits) {
  if (std::isnan(x)) return "null";
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string format_array(const std::vector<double>& xs, int digits) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_significant(xs[i], digits);
  }
  out += "]";
  return out;
}

}  // namespace li
