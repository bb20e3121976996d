#include "sscale/anomaly.hpp"

#include <algorithm>
#include <cmath>

#include "sscale/error.hpp"
#include "sscale/stats.hpp"

namespace sscale {

namespace {

void walk_pair(const std::vector<TimerNode>& a, const std::vector<TimerNode>& b,
               std::vector<std::string>& path, double threshold,
               RegressionReport& out) {
  std::vector<bool> b_matched(b.size(), false);
  for (const auto& na : a) {
    const TimerNode* nb = nullptr;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b_matched[j] && b[j].name == na.name) {
        nb = &b[j];
        b_matched[j] = true;
        break;
      }
    }
    path.push_back(na.name);
    if (nb == nullptr) {
      out.only_in_a.push_back(path);
    } else {
      Regression r;
      r.path = path;
      r.seconds_a = na.seconds;
      r.seconds_b = nb->seconds;
      r.ratio = nb->seconds / na.seconds;
      r.flagged = r.ratio >= threshold || r.ratio <= 1.0 / threshold;
      out.regressions.push_back(std::move(r));
      walk_pair(na.children, nb->children, path, threshold, out);
    }
    path.pop_back();
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b_matched[j]) continue;
    path.push_back(b[j].name);
    out.only_in_b.push_back(path);
    path.pop_back();
  }
}

}  // namespace

RegressionReport section_regression(const LogReport& a, const LogReport& b,
                                    double threshold) {
  if (!(threshold >= 1.0))
    throw ValidationError("regression threshold must be >= 1");
  RegressionReport report;
  std::vector<std::string> path;
  walk_pair(a.timers, b.timers, path, threshold, report);
  std::stable_sort(report.regressions.begin(), report.regressions.end(),
                   [](const Regression& x, const Regression& y) {
                     return x.ratio > y.ratio;
                   });
  return report;
}

namespace {

// Piecewise-linear interpolation of the aligned curve in log(P)-log(t)
// space, extrapolating with the end segments; a single point acts as a
// constant.
double interp_loglog(const std::vector<RunRecord>& curve, double ranks) {
  if (curve.size() == 1) return curve.front().t_step;
  const double x = std::log(ranks);
  std::size_t i = 0;
  while (i + 2 < curve.size() && std::log(double(curve[i + 1].ranks)) < x) {
    ++i;
  }
  const double x0 = std::log(double(curve[i].ranks));
  const double x1 = std::log(double(curve[i + 1].ranks));
  const double y0 = std::log(curve[i].t_step);
  const double y1 = std::log(curve[i + 1].t_step);
  const double f = (x - x0) / (x1 - x0);
  return std::exp(y0 + f * (y1 - y0));
}

}  // namespace

DivisibilitySplit rank_divisibility(const std::vector<RunRecord>& records,
                                    std::int64_t divisor,
                                    double slowdown_threshold) {
  if (records.empty()) throw ValidationError("no records to split");
  if (divisor < 1) throw ValidationError("divisor must be >= 1");
  if (!(slowdown_threshold > 1.0))
    throw ValidationError("slowdown threshold must be > 1");
  for (const auto& r : records) {
    if (r.platform != records.front().platform)
      throw ValidationError("divisibility split mixes platforms");
    if (r.gridpoints != records.front().gridpoints)
      throw ValidationError("divisibility split mixes problem sizes");
  }

  std::vector<RunRecord> aligned, misaligned;
  for (const auto& r : records) {
    (r.ranks % divisor == 0 ? aligned : misaligned).push_back(r);
  }

  DivisibilitySplit split;
  split.divisor = divisor;
  const std::string base = records.front().platform + "/n=" +
                           std::to_string(records.front().gridpoints);
  auto build = [&](std::vector<RunRecord> rs, const std::string& tag) {
    if (rs.empty()) {
      ScalingSeries s;
      s.problem_id = base + tag;
      s.gridpoints = records.front().gridpoints;
      return s;
    }
    return make_series(base + tag, std::move(rs),
                       SeriesChecks::PlatformAndSize);
  };
  split.aligned = build(std::move(aligned), "/aligned");
  split.misaligned = build(std::move(misaligned), "/misaligned");

  if (!split.aligned.records.empty() && !split.misaligned.records.empty()) {
    std::vector<double> ratios;
    ratios.reserve(split.misaligned.records.size());
    for (const auto& r : split.misaligned.records) {
      const double expected =
          interp_loglog(split.aligned.records, double(r.ranks));
      ratios.push_back(r.t_step / expected);
    }
    split.slowdown = median(ratios);
    split.flagged = *split.slowdown >= slowdown_threshold;
  }
  return split;
}

std::vector<SpeedupRow> platform_speedup(
    const RunRecord& reference, std::span<const RunRecord> others,
    const std::map<std::string, double>& claimed) {
  validate(reference);
  std::vector<SpeedupRow> rows;
  rows.reserve(others.size());
  for (const auto& r : others) {
    validate(r);
    if (r.gridpoints != reference.gridpoints) {
      throw ValidationError("speedup comparison mixes problem sizes (" +
                            reference.platform + " n=" +
                            std::to_string(reference.gridpoints) + " vs " +
                            r.platform + " n=" +
                            std::to_string(r.gridpoints) + ")");
    }
    SpeedupRow row;
    row.platform = r.platform;
    row.t_step = r.t_step;
    row.computed_speedup = reference.t_step / r.t_step;
    if (auto it = claimed.find(r.platform); it != claimed.end()) {
      row.claimed_speedup = it->second;
      row.consistent =
          std::abs(row.computed_speedup - it->second) <= 0.02;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double noise_index(std::span<const double> repeats) {
  if (repeats.size() < 2)
    throw ValidationError("noise index needs at least 2 samples");
  for (const double t : repeats) {
    if (!(t > 0)) throw ValidationError("timings must be positive");
  }
  return stddev(repeats) / mean(repeats);
}

}  // namespace sscale
