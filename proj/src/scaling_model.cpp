#include "sscale/scaling_model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>

#include "sscale/error.hpp"

namespace sscale {

std::int64_t grid_points(std::int64_t elements, int poly_order) {
  if (elements < 1) throw ValidationError("element count must be >= 1");
  if (poly_order < 1) throw ValidationError("poly order must be >= 1");
  const std::int64_t order = poly_order;
  std::int64_t cubed = 0;
  std::int64_t n = 0;
  if (__builtin_mul_overflow(order * order, order, &cubed) ||
      __builtin_mul_overflow(elements, cubed, &n)) {
    throw ValidationError("grid-point count overflows 64-bit range");
  }
  return n;
}

std::int64_t total_dofs(std::int64_t gridpoints) {
  if (gridpoints < 1) throw ValidationError("gridpoints must be >= 1");
  std::int64_t dofs = 0;
  if (__builtin_mul_overflow(std::int64_t{4}, gridpoints, &dofs)) {
    throw ValidationError("dof count overflows 64-bit range");
  }
  return dofs;
}

namespace {
void check_dof_multiplier(int dof_multiplier) {
  if (dof_multiplier != 1 && dof_multiplier != 4) {
    throw ValidationError("dof multiplier must be 1 or 4");
  }
}
}  // namespace

double mdofs(const RunRecord& r, int dof_multiplier) {
  check_dof_multiplier(dof_multiplier);
  return double(r.gridpoints) * dof_multiplier /
         (r.t_step * double(r.ranks)) / 1e6;
}

std::vector<EfficiencyPoint> efficiency_series(const ScalingSeries& s,
                                               int dof_multiplier) {
  check_dof_multiplier(dof_multiplier);
  if (s.records.empty()) throw ValidationError("empty series");
  const RunRecord& a = s.anchor();
  const double anchor_cost = double(a.ranks) * a.t_step;
  std::vector<EfficiencyPoint> pts;
  pts.reserve(s.records.size());
  for (const auto& r : s.records) {
    EfficiencyPoint p;
    p.ranks = r.ranks;
    p.n_over_p = double(s.gridpoints) / double(r.ranks);
    p.eta = anchor_cost / (double(r.ranks) * r.t_step);
    p.mdofs = mdofs(r, dof_multiplier);
    p.t_step = r.t_step;
    pts.push_back(p);
  }
  return pts;
}

double speed_efficiency(double aggregate_speed, std::int64_t ranks,
                        double single_rank_speed) {
  if (!(aggregate_speed > 0) || ranks < 1 || !(single_rank_speed > 0)) {
    throw ValidationError("speed_efficiency needs positive speeds and ranks");
  }
  return aggregate_speed / (double(ranks) * single_rank_speed);
}

KneeResult knee(const ScalingSeries& s, double eta_target,
                int dof_multiplier) {
  if (s.records.size() < 2)
    throw ValidationError("knee requires at least 2 records");
  if (!(eta_target > 0))
    throw ValidationError("eta target must be positive");
  const auto pts = efficiency_series(s, dof_multiplier);
  const double n = double(s.gridpoints);

  auto result = [&](double n_at, double t_at, const EfficiencyPoint& hi,
                    const EfficiencyPoint& lo, bool extrapolated) {
    KneeResult k;
    k.eta_target = eta_target;
    k.n_at_target = n_at;
    k.p_at_target = n / n_at;
    k.t_at_target = t_at;
    k.bracket_hi = hi;
    k.bracket_lo = lo;
    k.extrapolated = extrapolated;
    return k;
  };

  // Points run from largest n/P (anchor) to smallest; the first segment
  // where eta meets the target is the crossing at the largest n/P.
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double d0 = pts[i].eta - eta_target;
    const double d1 = pts[i + 1].eta - eta_target;
    const bool crosses = (d0 >= 0 && d1 <= 0) || (d0 <= 0 && d1 >= 0);
    if (!crosses) continue;
    const double span = pts[i].eta - pts[i + 1].eta;
    const double frac = span == 0.0 ? 0.0 : d0 / span;
    const double x0 = std::log10(pts[i].n_over_p);
    const double x1 = std::log10(pts[i + 1].n_over_p);
    const double n_at = std::pow(10.0, x0 + frac * (x1 - x0));
    const double t_at =
        pts[i].t_step + frac * (pts[i + 1].t_step - pts[i].t_step);
    return result(n_at, t_at, pts[i], pts[i + 1], false);
  }

  // No crossing: clamp to the point nearest the target in eta. When the
  // whole series sits above the target the knee lies beyond the smallest
  // measured n/P, so ties break toward smaller n/P; below, toward larger.
  const bool all_above = pts.front().eta > eta_target;
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double di = std::abs(pts[i].eta - eta_target);
    const double db = std::abs(pts[best].eta - eta_target);
    if (all_above ? di <= db : di < db) best = i;
  }
  const auto& p = pts[best];
  return result(p.n_over_p, p.t_step, p, p, true);
}

double fit_work_rate(const ScalingSeries& s) {
  if (s.records.empty()) throw ValidationError("empty series");
  const RunRecord& a = s.anchor();
  return a.t_step * double(a.ranks) / double(s.gridpoints);
}

double predict_tstep(double work_rate, double gridpoints, double ranks,
                     double eta) {
  if (!(work_rate > 0) || !(gridpoints > 0) || !(ranks > 0)) {
    throw ValidationError("predict_tstep needs positive inputs");
  }
  if (!(eta > 0) || eta > 1.2) {
    throw ValidationError("eta must be in (0, 1.2]");
  }
  return work_rate * (gridpoints / ranks) / eta;
}

double effective_flops(double fp64_flops, double fp32_flops) {
  if (fp64_flops < 0 || fp32_flops < 0) {
    throw ValidationError("flop rates must be nonnegative");
  }
  return fp64_flops + 0.5 * fp32_flops;
}

double saturated_speed(double measured_flops_per_rank, double eta) {
  if (!(measured_flops_per_rank > 0))
    throw ValidationError("measured speed must be positive");
  if (!(eta > 0) || eta > 1.0)
    throw ValidationError("eta must be in (0, 1]");
  return measured_flops_per_rank / eta;
}

CoarseGridSizes coarse_grid_sizes(double gridpoints, double ranks,
                                  int poly_order) {
  if (!(gridpoints > 0) || !(ranks > 0) || poly_order < 1) {
    throw ValidationError("coarse_grid_sizes needs positive inputs");
  }
  const double cube = double(poly_order) * poly_order * poly_order;
  CoarseGridSizes out;
  out.per_rank = (gridpoints / ranks) / cube;
  out.total = gridpoints / cube;
  return out;
}

double CoarseLogFit::at(double ranks) const {
  return offset + log2_coeff * std::log2(ranks);
}

CoarseLogFit fit_coarse_log_model(
    std::span<const std::pair<double, double>> points, bool zero_offset) {
  if (points.size() < 2)
    throw ValidationError("coarse-grid fit needs at least 2 points");
  std::set<double> distinct;
  for (const auto& [ranks, t] : points) {
    if (!(ranks > 0)) throw ValidationError("rank counts must be positive");
    distinct.insert(ranks);
  }
  if (distinct.size() < 2)
    throw ValidationError("coarse-grid fit is singular: all P equal");

  const Eigen::Index m = Eigen::Index(points.size());
  const Eigen::Index cols = zero_offset ? 1 : 2;
  Eigen::MatrixXd design(m, cols);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& [ranks, t] = points[std::size_t(i)];
    if (zero_offset) {
      design(i, 0) = std::log2(ranks);
    } else {
      design(i, 0) = 1.0;
      design(i, 1) = std::log2(ranks);
    }
    rhs(i) = t;
  }
  const Eigen::VectorXd beta = design.colPivHouseholderQr().solve(rhs);

  CoarseLogFit fit;
  fit.offset = zero_offset ? 0.0 : beta(0);
  fit.log2_coeff = zero_offset ? beta(0) : beta(1);
  fit.points_used.assign(points.begin(), points.end());
  return fit;
}

}  // namespace sscale
