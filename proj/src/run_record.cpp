#include "sscale/run_record.hpp"

#include <algorithm>
#include <map>

#include "sscale/error.hpp"
#include "sscale/scaling_model.hpp"
#include "sscale/stats.hpp"

namespace sscale {

bool operator==(const RunRecord& a, const RunRecord& b) {
  return a.platform == b.platform && a.config == b.config &&
         a.ranks == b.ranks && a.ranks_per_node == b.ranks_per_node &&
         a.gridpoints == b.gridpoints && a.elements == b.elements &&
         a.poly_order == b.poly_order && a.t_step == b.t_step &&
         a.steps_timed == b.steps_timed && a.v_iters == b.v_iters &&
         a.p_iters == b.p_iters && a.flops_per_rank == b.flops_per_rank;
}

void validate(const RunRecord& r) {
  if (r.platform.empty()) throw ValidationError("record has empty platform");
  if (r.ranks < 1) throw ValidationError("ranks must be >= 1");
  if (r.ranks_per_node < 1)
    throw ValidationError("ranks_per_node must be >= 1");
  if (r.gridpoints < r.ranks)
    throw ValidationError("gridpoints must be >= ranks");
  if (!(r.t_step > 0.0)) throw ValidationError("t_step must be > 0");
  if (r.steps_timed < 1) throw ValidationError("steps_timed must be >= 1");
  if (r.elements && *r.elements < 1)
    throw ValidationError("elements must be >= 1");
  if (r.poly_order && *r.poly_order < 1)
    throw ValidationError("poly_order must be >= 1");
  if (r.elements && r.poly_order &&
      grid_points(*r.elements, *r.poly_order) != r.gridpoints) {
    throw ValidationError(
        "gridpoints inconsistent with elements * poly_order^3 (n=" +
        std::to_string(r.gridpoints) + ", E=" + std::to_string(*r.elements) +
        ", N=" + std::to_string(*r.poly_order) + ")");
  }
  if (r.v_iters && *r.v_iters < 0) throw ValidationError("v_iters < 0");
  if (r.p_iters && *r.p_iters < 0) throw ValidationError("p_iters < 0");
  if (r.flops_per_rank && !(*r.flops_per_rank > 0))
    throw ValidationError("flops_per_rank must be > 0");
}

void normalize_config(RunRecord& r) {
  std::sort(r.config.begin(), r.config.end());
  r.config.erase(std::unique(r.config.begin(), r.config.end()),
                 r.config.end());
}

ScalingSeries make_series(std::string problem_id,
                          std::vector<RunRecord> records, SeriesChecks checks) {
  if (records.empty())
    throw ValidationError("series '" + problem_id + "' has no records");
  for (auto& r : records) {
    normalize_config(r);
    validate(r);
  }
  const RunRecord& first = records.front();
  for (const auto& r : records) {
    if (r.platform != first.platform)
      throw ValidationError("series '" + problem_id +
                            "' mixes platforms: " + first.platform + " vs " +
                            r.platform);
    if (r.gridpoints != first.gridpoints)
      throw ValidationError("series '" + problem_id +
                            "' mixes problem sizes");
    if (checks == SeriesChecks::Strict && r.config != first.config)
      throw ValidationError("series '" + problem_id + "' mixes config tags");
  }

  // Repeated timings at one rank count collapse to a single record with
  // the median t_step; robust to noisy systems.
  std::map<std::int64_t, std::vector<RunRecord>> by_ranks;
  for (auto& r : records) by_ranks[r.ranks].push_back(std::move(r));

  ScalingSeries s;
  s.problem_id = std::move(problem_id);
  s.gridpoints = first.gridpoints;
  for (auto& [ranks, group] : by_ranks) {
    RunRecord merged = group.front();
    if (group.size() > 1) {
      std::vector<double> times;
      times.reserve(group.size());
      for (const auto& g : group) times.push_back(g.t_step);
      merged.t_step = median(times);
    }
    s.records.push_back(std::move(merged));
  }
  return s;
}

}  // namespace sscale
