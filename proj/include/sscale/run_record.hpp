#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sscale {

// One timed run of a fixed-size problem on one platform.
//
// `ranks` is the number of MPI ranks, one rank per device (or per GCD on
// MI250X-style packages). `gridpoints` is the global grid-point count n;
// when the spectral-element count and polynomial order are known they must
// satisfy n = elements * poly_order^3.
struct RunRecord {
  std::string platform;
  std::vector<std::string> config;  // free-form tags: interconnect, "gpudirect", ...
  std::int64_t ranks = 1;
  std::int64_t ranks_per_node = 1;
  std::int64_t gridpoints = 1;
  std::optional<std::int64_t> elements;
  std::optional<int> poly_order;
  double t_step = 0.0;  // average wall-clock seconds per step
  std::int64_t steps_timed = 1;
  std::optional<double> v_iters;  // avg velocity iterations per step
  std::optional<double> p_iters;  // avg pressure iterations per step
  std::optional<double> flops_per_rank;

  double work_per_rank() const { return double(gridpoints) / double(ranks); }
};

bool operator==(const RunRecord& a, const RunRecord& b);

// Throws ValidationError on any violated invariant (non-positive t_step,
// ranks < 1, n < P, inconsistent n vs E*N^3, ...). Partial node occupancy
// is legal: ranks need not be a multiple of ranks_per_node.
void validate(const RunRecord& r);

// Strong-scaling series: one problem (fixed n) on one platform/config,
// records sorted by ascending rank count with no duplicates. The anchor
// (smallest P able to hold the problem) is records.front().
struct ScalingSeries {
  std::string problem_id;
  std::int64_t gridpoints = 0;
  std::vector<RunRecord> records;

  const RunRecord& anchor() const { return records.front(); }
};

// How strictly make_series checks that records belong together.
enum class SeriesChecks {
  Strict,           // identical platform, config tags, and n
  PlatformAndSize,  // identical platform and n only (config tags may differ)
};

// Builds a series from unordered records: validates each record, checks
// membership per `checks`, merges duplicate rank counts by the median
// t_step (metadata of the first occurrence wins), sorts by ascending P.
ScalingSeries make_series(std::string problem_id, std::vector<RunRecord> records,
                          SeriesChecks checks = SeriesChecks::Strict);

// Sorts and deduplicates config tags in place.
void normalize_config(RunRecord& r);

}  // namespace sscale
