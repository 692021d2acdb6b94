#pragma once

#include <cstdio>
#include <string>

namespace steklov::detail {

/// Shortest-safe decimal for CSV output: 17 significant digits, round-trips.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace steklov::detail
