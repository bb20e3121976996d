#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sscale/logparse.hpp"
#include "sscale/run_record.hpp"

namespace sscale {

// Timing ratio of one timer path between two runs. Flagging is two-sided:
// both slowdowns (ratio >= threshold) and speedups (ratio <= 1/threshold)
// are surfaced.
struct Regression {
  std::vector<std::string> path;
  double seconds_a = 0.0;
  double seconds_b = 0.0;
  double ratio = 0.0;  // seconds_b / seconds_a
  bool flagged = false;
};

struct RegressionReport {
  std::vector<Regression> regressions;  // common paths, descending ratio
  std::vector<std::vector<std::string>> only_in_a;
  std::vector<std::vector<std::string>> only_in_b;
};

// Walks the two timer trees in lockstep by path and compares absolute
// section times. Paths present on only one side are listed separately.
RegressionReport section_regression(const LogReport& a, const LogReport& b,
                                    double threshold = 1.5);

// Records partitioned by rank-count divisibility, with the median slowdown
// of the misaligned class relative to the aligned curve.
struct DivisibilitySplit {
  std::int64_t divisor = 8;
  ScalingSeries aligned;     // ranks % divisor == 0
  ScalingSeries misaligned;  // ranks % divisor != 0
  std::optional<double> slowdown;  // undefined when either class is empty
  bool flagged = false;
};

// Splits records by P mod divisor and estimates how much slower the
// misaligned points run: each misaligned t_step is compared against the
// aligned curve interpolated at its P in log(P)-log(t) space, and the
// median ratio is reported. Records must share platform and n.
DivisibilitySplit rank_divisibility(const std::vector<RunRecord>& records,
                                    std::int64_t divisor = 8,
                                    double slowdown_threshold = 1.25);

// One platform's speedup relative to a reference record, optionally
// checked against a claimed value at +/-0.02 (two-decimal printing).
struct SpeedupRow {
  std::string platform;
  double t_step = 0.0;
  std::optional<double> claimed_speedup;
  double computed_speedup = 0.0;  // t_ref / t_step
  bool consistent = true;
};

// All records must be timings of the same problem (same n).
std::vector<SpeedupRow> platform_speedup(
    const RunRecord& reference, std::span<const RunRecord> others,
    const std::map<std::string, double>& claimed = {});

// Coefficient of variation (population stddev / mean) of repeated timings
// of one (platform, P, n) point. Needs at least two samples.
double noise_index(std::span<const double> repeats);

}  // namespace sscale
