#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace kpz {

// Shortest decimal representation (up to 17 significant digits) that
// round-trips to the same double; keeps CSV/JSON output byte-deterministic.
inline std::string fmt_shortest(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; prec++) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace kpz
