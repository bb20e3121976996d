#include "sscale/planner.hpp"

#include <cmath>

#include "sscale/error.hpp"

namespace sscale {

CampaignPlan plan(std::int64_t gridpoints, const KneeResult& knee,
                  std::int64_t ranks_per_node, std::int64_t steps,
                  double work_rate) {
  if (gridpoints < 1) throw ValidationError("gridpoints must be >= 1");
  if (ranks_per_node < 1)
    throw ValidationError("ranks_per_node must be >= 1");
  if (steps < 1) throw ValidationError("steps must be >= 1");
  if (!(work_rate > 0)) throw ValidationError("work rate must be > 0");
  if (!(knee.n_at_target > 0))
    throw ValidationError("knee n_at_target must be > 0");
  if (!(knee.eta_target > 0) || knee.eta_target > 1.0)
    throw ValidationError("knee eta_target must be in (0, 1]");

  CampaignPlan p;
  p.gridpoints = gridpoints;
  p.n_at_target = knee.n_at_target;
  p.eta_target = knee.eta_target;
  p.ranks = std::int64_t(std::ceil(double(gridpoints) / knee.n_at_target));
  if (p.ranks < 1) p.ranks = 1;
  p.ranks_per_node = ranks_per_node;
  p.nodes = double(p.ranks) / double(ranks_per_node);
  p.nodes_whole = (p.ranks + ranks_per_node - 1) / ranks_per_node;
  p.t_step_est = work_rate * knee.n_at_target / knee.eta_target;
  p.steps = steps;
  p.node_hours = p.nodes * double(steps) * p.t_step_est / 3600.0;
  p.node_hours_whole =
      double(p.nodes_whole) * double(steps) * p.t_step_est / 3600.0;
  return p;
}

std::vector<CampaignPlan> sweep(const std::vector<std::int64_t>& gridpoints,
                                const KneeResult& knee,
                                std::int64_t ranks_per_node,
                                std::int64_t steps, double work_rate) {
  if (gridpoints.empty()) throw ValidationError("no problem sizes given");
  std::vector<CampaignPlan> plans;
  plans.reserve(gridpoints.size());
  for (const std::int64_t n : gridpoints) {
    plans.push_back(plan(n, knee, ranks_per_node, steps, work_rate));
  }
  return plans;
}

}  // namespace sscale
