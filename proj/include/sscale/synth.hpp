#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sscale/run_record.hpp"

namespace sscale {

// Parametric per-step cost model for generating synthetic scaling data:
//
//   t_step(P) = compute_coeff * (n/P) + overhead + log2_coeff * log2(P)
//
// i.e. a perfectly-scaling compute term, a fixed per-step overhead, and a
// log2(P) communication term (coarse-grid-solve-like growth). Each sample
// is multiplied by (1 + u * noise_rel) with u uniform in [-1, 1] from the
// seeded generator.
struct CostModel {
  double compute_coeff = 0.0;  // seconds per grid point per rank-step
  double overhead = 0.0;       // seconds per step
  double log2_coeff = 0.0;     // seconds per log2(P)
  double noise_rel = 0.0;
  std::uint64_t seed = 0;
};

// Noise-free model evaluation.
double model_tstep(const CostModel& m, double gridpoints, double ranks);

struct GenerateOptions {
  std::string problem_id;  // defaults to "synthetic/n=<n>"
  std::string platform = "synthetic";
  std::vector<std::string> config;
  std::int64_t ranks_per_node = 1;
  std::int64_t steps_timed = 1000;
};

// Deterministic given the model seed; identical output across runs and
// platforms. ranks must be strictly increasing and each <= n.
ScalingSeries generate(const CostModel& m, std::int64_t gridpoints,
                       const std::vector<std::int64_t>& ranks,
                       const GenerateOptions& opts = {});

// Brute-force ground truth for knee(): scans integer P upward from the
// anchor, computes exact model efficiency, and returns n/P at the last P
// with eta >= eta_target. nullopt means eta never drops below the target
// for any P <= n (e.g. a pure-compute model). Requires noise_rel == 0.
std::optional<double> oracle_knee(const CostModel& m, std::int64_t gridpoints,
                                  double eta_target,
                                  std::int64_t anchor_ranks = 1);

}  // namespace sscale
