#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sscale/run_record.hpp"

namespace sscale {

// One record of a series reduced to the strong-scaling view: per-rank work
// n/P, parallel efficiency eta relative to the series anchor, and MDOFS
// (millions of dofs per second per rank).
struct EfficiencyPoint {
  std::int64_t ranks = 0;
  double n_over_p = 0.0;
  double eta = 0.0;
  double mdofs = 0.0;
  double t_step = 0.0;
};

// Where a series crosses a target efficiency. n_at_target is the per-rank
// grid-point count at the crossing (the practical strong-scale limit for
// that target); p_at_target = n / n_at_target is real-valued, planners
// round it. bracket_hi/bracket_lo are the measured points on the larger-
// and smaller-n/P side of the interpolated crossing; when `extrapolated`
// is set the target was never crossed and both brackets are the nearest
// measured point, which the result is clamped to.
struct KneeResult {
  double eta_target = 0.0;
  double n_at_target = 0.0;
  double p_at_target = 0.0;
  double t_at_target = 0.0;
  EfficiencyPoint bracket_hi;
  EfficiencyPoint bracket_lo;
  bool extrapolated = false;
};

// Least-squares fit of t(P) = offset + log2_coeff * log2(P).
struct CoarseLogFit {
  double offset = 0.0;
  double log2_coeff = 0.0;
  std::vector<std::pair<double, double>> points_used;

  double at(double ranks) const;
};

struct CoarseGridSizes {
  double per_rank = 0.0;
  double total = 0.0;
};

// n = E * N^3 for a spectral-element mesh; throws on overflow.
std::int64_t grid_points(std::int64_t elements, int poly_order);

// Total degrees of freedom: 4n (three velocity components plus pressure).
std::int64_t total_dofs(std::int64_t gridpoints);

// Millions of dofs per second per rank. dof_multiplier is 1 (grid points)
// or 4 (total dofs); the choice cancels out of every efficiency ratio.
double mdofs(const RunRecord& r, int dof_multiplier = 1);

// eta(P) = P0*t_step(P0) / (P*t_step(P)) against the series anchor, which
// gets eta = 1 exactly. Equal to MDOFS(P)/MDOFS(P0).
std::vector<EfficiencyPoint> efficiency_series(const ScalingSeries& s,
                                               int dof_multiplier = 1);

// Speed-based efficiency: S_P / (P * S_1). S_1 is externally supplied
// (e.g. a saturated single-rank speed); it is never inferred.
double speed_efficiency(double aggregate_speed, std::int64_t ranks,
                        double single_rank_speed);

// Locates the efficiency knee by piecewise-linear interpolation of eta
// over log10(n/P). Returns the crossing at the largest n/P (the
// conservative knee when measured data is non-monotone); t_at_target is
// interpolated against log10(n/P) on the same segment. If eta never
// crosses the target, the result is clamped to the nearest measured point
// and flagged `extrapolated`.
KneeResult knee(const ScalingSeries& s, double eta_target = 0.8,
                int dof_multiplier = 1);

// Composite work rate C/S1 in seconds per grid point per rank-step, taken
// from the anchor record assuming eta(P0) = 1. Only the composite is
// identifiable from timing data.
double fit_work_rate(const ScalingSeries& s);

// t_step = work_rate * (n/P) / eta. At eta = 0.8 and n/P at the knee this
// is the predicted time per step at the 80% operating point.
double predict_tstep(double work_rate, double gridpoints, double ranks,
                     double eta);

// FP32 operations count as half a flop each.
double effective_flops(double fp64_flops, double fp32_flops);

// Projects a measured per-rank speed to full efficiency: measured / eta.
double saturated_speed(double measured_flops_per_rank, double eta);

// Coarse-grid problem size of the pressure preconditioner: one unknown
// per spectral element, so per_rank = (n/P)/N^3 and total = n/N^3
// (independent of P).
CoarseGridSizes coarse_grid_sizes(double gridpoints, double ranks,
                                  int poly_order);

// Fits t = a + b*log2(P) by least squares over (P, t_coarse) points; with
// zero_offset the intercept is pinned to 0, which makes predicted time
// ratios equal to ratios of log2(P). Exactly interpolates two points.
CoarseLogFit fit_coarse_log_model(
    std::span<const std::pair<double, double>> points,
    bool zero_offset = false);

}  // namespace sscale
