#include "sscale/synth.hpp"

#include <cmath>
#include <random>

#include "sscale/error.hpp"

namespace sscale {

double model_tstep(const CostModel& m, double gridpoints, double ranks) {
  return m.compute_coeff * (gridpoints / ranks) + m.overhead +
         m.log2_coeff * std::log2(ranks);
}

namespace {
void validate_model(const CostModel& m) {
  if (!(m.compute_coeff > 0))
    throw ValidationError("compute coefficient must be > 0");
  if (m.overhead < 0 || m.log2_coeff < 0)
    throw ValidationError("overhead and log2 coefficients must be >= 0");
  if (m.noise_rel < 0) throw ValidationError("noise_rel must be >= 0");
  if (m.noise_rel >= 1)
    throw ValidationError("noise_rel must be < 1 (times stay positive)");
}

// Uniform in [-1, 1] from raw generator bits; identical on every platform,
// unlike std::uniform_real_distribution.
double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
}
}  // namespace

ScalingSeries generate(const CostModel& m, std::int64_t gridpoints,
                       const std::vector<std::int64_t>& ranks,
                       const GenerateOptions& opts) {
  validate_model(m);
  if (ranks.empty()) throw ValidationError("no rank counts given");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1) throw ValidationError("rank counts must be >= 1");
    if (ranks[i] > gridpoints)
      throw ValidationError("rank count exceeds gridpoints");
    if (i > 0 && ranks[i] <= ranks[i - 1])
      throw ValidationError("rank counts must be strictly increasing");
  }

  std::mt19937_64 rng(m.seed);
  std::vector<RunRecord> records;
  records.reserve(ranks.size());
  for (const std::int64_t p : ranks) {
    double t = model_tstep(m, double(gridpoints), double(p));
    if (m.noise_rel > 0) {
      t *= 1.0 + uniform_pm1(rng) * m.noise_rel;
    }
    RunRecord r;
    r.platform = opts.platform;
    r.config = opts.config;
    r.ranks = p;
    r.ranks_per_node = opts.ranks_per_node;
    r.gridpoints = gridpoints;
    r.t_step = t;
    r.steps_timed = opts.steps_timed;
    records.push_back(std::move(r));
  }
  std::string id = opts.problem_id.empty()
                       ? opts.platform + "/n=" + std::to_string(gridpoints)
                       : opts.problem_id;
  return make_series(std::move(id), std::move(records));
}

std::optional<double> oracle_knee(const CostModel& m, std::int64_t gridpoints,
                                  double eta_target,
                                  std::int64_t anchor_ranks) {
  validate_model(m);
  if (m.noise_rel != 0)
    throw ValidationError("oracle requires a noise-free model");
  if (!(eta_target > 0) || eta_target > 1.0)
    throw ValidationError("eta target must be in (0, 1]");
  if (anchor_ranks < 1 || anchor_ranks > gridpoints)
    throw ValidationError("anchor ranks out of range");

  // Pure-compute models scale perfectly; eta never leaves 1.
  if (m.overhead == 0 && m.log2_coeff == 0) return std::nullopt;

  const double anchor_cost =
      double(anchor_ranks) * model_tstep(m, double(gridpoints),
                                         double(anchor_ranks));
  std::int64_t last_ok = anchor_ranks;
  for (std::int64_t p = anchor_ranks + 1; p <= gridpoints; ++p) {
    const double eta =
        anchor_cost / (double(p) * model_tstep(m, double(gridpoints),
                                               double(p)));
    if (eta < eta_target) {
      return double(gridpoints) / double(last_ok);
    }
    last_ok = p;
  }
  return std::nullopt;  // never dropped below target within P <= n
}

}  // namespace sscale
