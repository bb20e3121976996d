#pragma once

#include <cstdint>
#include <vector>

#include "sscale/scaling_model.hpp"

namespace sscale {

// Campaign estimate for one problem size: how many ranks sustain the
// target efficiency, the expected time per step there, and the node-hours
// for a run of `steps` timesteps. `nodes` is fractional (P need not fill
// whole nodes); the *_whole fields round node counts up for schedulers.
struct CampaignPlan {
  std::int64_t gridpoints = 0;
  double n_at_target = 0.0;
  double eta_target = 0.0;
  std::int64_t ranks = 0;  // ceil(n / n_at_target)
  std::int64_t ranks_per_node = 0;
  double nodes = 0.0;
  std::int64_t nodes_whole = 0;
  double t_step_est = 0.0;
  std::int64_t steps = 0;
  double node_hours = 0.0;  // nodes * steps * t_step_est / 3600
  double node_hours_whole = 0.0;
};

// work_rate is the composite C/S1 from fit_work_rate; t_step_est is
// work_rate * n_at_target / eta_target, independent of n.
CampaignPlan plan(std::int64_t gridpoints, const KneeResult& knee,
                  std::int64_t ranks_per_node, std::int64_t steps,
                  double work_rate);

std::vector<CampaignPlan> sweep(const std::vector<std::int64_t>& gridpoints,
                                const KneeResult& knee,
                                std::int64_t ranks_per_node,
                                std::int64_t steps, double work_rate);

}  // namespace sscale
