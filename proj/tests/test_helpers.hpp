#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sscale::testing {

// Geometric rank ladder with `steps_per_octave` points per doubling,
// rounded to integers and deduplicated. Dense enough that piecewise-linear
// interpolation error stays well below the knee tolerances.
inline std::vector<std::int64_t> geometric_ladder(std::int64_t max_ranks,
                                                  int steps_per_octave = 3) {
  std::vector<std::int64_t> out;
  for (int k = 0;; ++k) {
    const auto p = std::int64_t(
        std::llround(std::pow(2.0, double(k) / steps_per_octave)));
    if (p > max_ranks) break;
    if (out.empty() || p > out.back()) out.push_back(p);
  }
  return out;
}

}  // namespace sscale::testing
