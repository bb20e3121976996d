// Acceptance suite: end-to-end checks of the published arithmetic the
// toolkit must reproduce exactly, plus oracle/property suites for the
// fitting machinery. Prints one PASS/FAIL line per criterion; exits
// nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sscale/anomaly.hpp"
#include "sscale/error.hpp"
#include "sscale/logparse.hpp"
#include "sscale/planner.hpp"
#include "sscale/scaling_model.hpp"
#include "sscale/store.hpp"
#include "sscale/synth.hpp"
#include "test_helpers.hpp"

using namespace sscale;
using sscale::testing::geometric_ladder;

namespace {

const std::string kDataDir = SSCALE_TEST_DATA_DIR;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

void require_close(double actual, double expected, double rel_tol,
                   const std::string& what) {
  const double denom = std::abs(expected) > 0 ? std::abs(expected) : 1.0;
  if (std::abs(actual - expected) / denom > rel_tol) {
    std::ostringstream msg;
    msg << what << ": got " << actual << ", expected " << expected
        << " (rel tol " << rel_tol << ")";
    throw CheckFailure(msg.str());
  }
}

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string reason;
  try {
    body();
  } catch (const std::exception& e) {
    reason = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (reason.empty() && elapsed >= budget_seconds) {
    std::ostringstream msg;
    msg << "runtime " << elapsed << " s exceeds budget " << budget_seconds
        << " s";
    reason = msg.str();
  }
  std::printf("[%s] criterion %d: %s (%.3f s)\n",
              reason.empty() ? "PASS" : "FAIL", number, label.c_str(),
              elapsed);
  if (!reason.empty()) {
    std::printf("       %s\n", reason.c_str());
    ++g_failures;
  }
}

// --- criterion bodies -----------------------------------------------------

void speedup_table() {
  const auto records = read_records_csv(kDataDir + "/single-gpu-table.csv");
  const RunRecord* summit = nullptr;
  for (const auto& r : records) {
    if (r.platform == "summit") summit = &r;
  }
  require(summit != nullptr, "summit row missing from fixture");
  const std::map<std::string, double> claimed = {{"spock", 0.84},
                                                 {"crusher", 1.32},
                                                 {"thetagpu", 1.57},
                                                 {"perlmutter", 1.62},
                                                 {"polaris", 1.62}};
  const auto rows = platform_speedup(*summit, records, claimed);

  std::map<std::string, SpeedupRow> by_platform;
  for (const auto& r : rows) by_platform[r.platform] = r;

  const SpeedupRow& crusher = by_platform.at("crusher");
  require(std::abs(crusher.computed_speedup - 1.33) <= 0.01,
          "crusher speedup outside 1.33 +/- 0.01");
  require(crusher.consistent, "crusher row must verify against claimed 1.32");

  const std::map<std::string, double> expected_computed = {
      {"spock", 1.91}, {"thetagpu", 1.18}, {"perlmutter", 1.92},
      {"polaris", 1.85}};
  for (const auto& [platform, expected] : expected_computed) {
    const SpeedupRow& row = by_platform.at(platform);
    require(std::abs(row.computed_speedup - expected) <= 0.01,
            platform + " computed speedup outside " +
                std::to_string(expected) + " +/- 0.01");
    require(!row.consistent,
            platform + " must be flagged inconsistent with its claim");
  }
}

void coarse_log_ratio() {
  const std::vector<std::pair<double, double>> pts = {{100.0, 0.65},
                                                      {1000.0, 1.0}};
  const CoarseLogFit fit = fit_coarse_log_model(pts, /*zero_offset=*/true);
  const double predicted = fit.at(1000.0) / fit.at(100.0);
  require_close(predicted, std::log2(1000.0) / std::log2(100.0), 1e-12,
                "zero-offset model ratio");
  require_close(predicted, 1.500, 1e-9, "predicted ratio");
  const double measured = 1.0 / 0.65;
  require_close(measured, 1.538, 1e-3, "measured ratio");
  require(std::abs(measured - predicted) / measured <= 0.03,
          "measured ratio deviates more than 3% from the log2 model");
}

void logfile_suite() {
  const LogReport a = parse_log_file(kDataDir + "/perlmutter-ss10-p48.log");
  const LogReport b = parse_log_file(kDataDir + "/perlmutter-ss11-p48.log");

  const std::vector<std::string> solve_path = {"solve"};
  require(find_timer(a, solve_path).seconds == 6.12031e+01,
          "baseline solve time must parse exactly");
  require(find_timer(b, solve_path).seconds == 2.05867e+02,
          "upgraded solve time must parse exactly");
  require(a.aggregate_flops == 3.36729e+13, "baseline aggregate FLOPS");
  require(b.aggregate_flops == 1.00108e+13, "upgraded aggregate FLOPS");

  const auto rep = section_regression(a, b);
  auto ratio_of = [&](const std::string& leaf) -> const Regression& {
    for (const auto& r : rep.regressions) {
      if (r.path.back() == leaf) return r;
    }
    throw CheckFailure("timer '" + leaf + "' missing from regressions");
  };
  const Regression& smoother = ratio_of("pMG smoother");
  require(std::abs(smoother.ratio - 9.86) <= 0.01,
          "smoother ratio outside 9.86 +/- 0.01");
  require(smoother.flagged, "smoother regression must be flagged");
  require_close(ratio_of("coarse grid").ratio, 1.04, 1e-2,
                "coarse grid ratio");
  require(!ratio_of("coarse grid").flagged,
          "coarse grid must not be flagged");
  require_close(ratio_of("makef").ratio, 0.997, 1e-2, "makef ratio");
  require(!ratio_of("makef").flagged, "makef must not be flagged");

  require_close(saturated_speed(701e9, 0.8), 876.25e9, 1e-12,
                "saturated speed projection");
}

void grid_point_arithmetic() {
  require(grid_points(7168, 7) == 2458624, "single rod n = E*N^3");
  require(grid_points(277000, 7) == 95011000, "case 1 n = E*N^3");
  require(grid_points(470900, 7) == 161518700, "case 2 n = E*N^3");
  require(grid_points(4709000, 7) == 1615187000, "case 3 n = E*N^3");
}

void coarse_grid_estimate() {
  const auto per = coarse_grid_sizes(2e6, 1.0, 7);
  require_close(per.per_rank, 2e6 / 343.0, 0.01, "per-rank coarse size");
  require_close(per.per_rank, 5831.0, 0.01, "per-rank coarse size approx");

  const double ranks = 27648.0;
  const auto total = coarse_grid_sizes(2e6 * ranks, ranks, 7);
  require_close(total.total, 1.6e8, 0.01, "total coarse size at P=27648");
}

void knee_oracle_grid() {
  const std::int64_t n = 8000000000;
  const auto ladder = geometric_ladder(std::int64_t(1) << 22);
  const double compute[] = {1e-9, 1e-8, 1e-7};
  const double overheads[] = {0.0, 1e-4, 1e-3, 1e-2};
  const double comms[] = {0.0, 1e-4, 1e-3};

  int models = 0;
  for (const double a : compute) {
    for (const double b : overheads) {
      for (const double c : comms) {
        if (b == 0.0 && c == 0.0) continue;  // knee unbounded by design
        CostModel m;
        m.compute_coeff = a;
        m.overhead = b;
        m.log2_coeff = c;

        const auto oracle = oracle_knee(m, n, 0.8);
        require(oracle.has_value(), "oracle knee must exist for this model");

        const KneeResult clean = knee(generate(m, n, ladder), 0.8);
        require(!clean.extrapolated, "knee must be bracketed by the ladder");
        require_close(clean.n_at_target, *oracle, 0.02,
                      "noise-free knee vs oracle");

        CostModel noisy = m;
        noisy.noise_rel = 0.01;
        noisy.seed = 1000 + std::uint64_t(models);
        const KneeResult k2 = knee(generate(noisy, n, ladder), 0.8);
        require_close(k2.n_at_target, *oracle, 0.10,
                      "1%-noise knee vs oracle");
        ++models;
      }
    }
  }
  require(models >= 27, "model grid must cover at least 27 points");
}

void efficiency_identities() {
  // anchor exactness + agreement of the two efficiency formulations
  int checked = 0;
  for (const double a : {1e-9, 1e-8}) {
    for (const double b : {1e-4, 1e-3}) {
      CostModel m;
      m.compute_coeff = a;
      m.overhead = b;
      m.noise_rel = 0.02;
      m.seed = 7 + std::uint64_t(checked);
      const auto s = generate(m, 100000000, geometric_ladder(1 << 12));
      for (const int mult : {1, 4}) {
        const auto pts = efficiency_series(s, mult);
        require(pts.front().eta == 1.0, "anchor efficiency must be exactly 1");
        for (const auto& p : pts) {
          const double via_mdofs = p.mdofs / pts.front().mdofs;
          require(std::abs(p.eta - via_mdofs) <= 1e-12 * via_mdofs,
                  "time-ratio and MDOFS-ratio efficiencies must agree");
        }
      }
      const KneeResult k1 = knee(s, 0.8, 1);
      const KneeResult k4 = knee(s, 0.8, 4);
      require(k1.n_at_target == k4.n_at_target,
              "knee must not depend on the dof multiplier");
      ++checked;
    }
  }

  // section_regression antisymmetry on the embedded logfiles
  const LogReport a = parse_log_file(kDataDir + "/perlmutter-ss10-p48.log");
  const LogReport b = parse_log_file(kDataDir + "/perlmutter-ss11-p48.log");
  const auto fwd = section_regression(a, b);
  const auto rev = section_regression(b, a);
  require(fwd.regressions.size() == rev.regressions.size(),
          "both comparison directions must cover the same paths");
  for (const auto& f : fwd.regressions) {
    bool matched = false;
    for (const auto& r : rev.regressions) {
      if (r.path != f.path) continue;
      require(std::abs(f.ratio * r.ratio - 1.0) <= 1e-12,
              "swapping the reports must invert every ratio");
      matched = true;
    }
    require(matched, "path sets must match between directions");
  }

  // synth -> csv -> ingest -> csv byte equality
  CostModel m;
  m.compute_coeff = 1e-8;
  m.overhead = 1e-3;
  m.noise_rel = 0.01;
  m.seed = 12345;
  GenerateOptions opts;
  opts.platform = "synthetic";
  opts.config = {"demo"};
  opts.ranks_per_node = 8;
  const auto series = generate(m, 100000000, {8, 16, 32, 64, 128}, opts);
  const std::string csv = records_to_csv(series.records);
  const auto loaded = records_from_csv(csv);
  require(records_to_csv(loaded) == csv,
          "CSV round trip must be byte-identical");
  require(loaded.size() == series.records.size(), "record count preserved");
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    require(loaded[i] == series.records[i], "records preserved exactly");
  }
}

void planner_arithmetic() {
  KneeResult k;
  k.n_at_target = 3e6;
  k.eta_target = 0.8;
  const double work_rate = 0.05 * 0.8 / 3e6;  // t_step_est = 0.05 s
  const CampaignPlan p = plan(1600000000, k, 8, 2000, work_rate);
  require(p.ranks == 534, "P_target = ceil(1.6e9/3e6) = 534");
  require(std::abs(p.node_hours - 1.854) <= 0.001,
          "node-hours outside 1.854 +/- 0.001");

  k.n_at_target = 3e6;
  const CampaignPlan unit = plan(3000000, k, 8, 2000, work_rate);
  require(unit.ranks == 1, "n = n_at_target must plan a single rank");
}

void divisibility_detector() {
  const std::int64_t n = 100000000;
  const double a = 1e-8, b = 5e-4;
  auto t_model = [&](double ranks) { return a * double(n) / ranks + b; };
  auto rec = [&](std::int64_t ranks, double factor) {
    RunRecord r;
    r.platform = "crusherlike";
    r.config = {"early"};
    r.ranks = ranks;
    r.ranks_per_node = 8;
    r.gridpoints = n;
    r.t_step = factor * t_model(double(ranks));
    r.steps_timed = 2000;
    return r;
  };
  std::vector<RunRecord> records;
  for (const std::int64_t p : {8, 16, 24, 32, 48, 64, 96, 128}) {
    records.push_back(rec(p, 1.0));
  }
  for (const std::int64_t p : {12, 20, 36, 52, 76, 100}) {
    records.push_back(rec(p, 2.0));
  }
  const auto split = rank_divisibility(records);
  require(split.slowdown.has_value(), "slowdown must be defined");
  require(*split.slowdown >= 1.9 && *split.slowdown <= 2.1,
          "2x-slower misaligned points must report slowdown in [1.9, 2.1]");
  require(split.flagged, "2x slowdown must be flagged");

  std::vector<RunRecord> uniform;
  for (const std::int64_t p : {8, 12, 16, 20, 24, 32, 48, 52, 64}) {
    uniform.push_back(rec(p, 1.0));
  }
  const auto flat = rank_divisibility(uniform);
  require(flat.slowdown.has_value(), "uniform slowdown must be defined");
  require(!flat.flagged, "a uniform series must not be flagged");
}

}  // namespace

int main() {
  criterion(1, "single-GPU speedup table verification", 1.0, speedup_table);
  criterion(2, "coarse-grid log2 cost ratio", 1.0, coarse_log_ratio);
  criterion(3, "logfile suite: solve times, FLOPS, smoother regression", 1.0,
            logfile_suite);
  criterion(4, "grid-point arithmetic n = E*N^3", 60.0,
            grid_point_arithmetic);
  criterion(5, "coarse-grid size estimate", 60.0, coarse_grid_estimate);
  criterion(6, "knee vs brute-force oracle over the model grid", 10.0,
            knee_oracle_grid);
  criterion(7, "efficiency identities and round-trip properties", 60.0,
            efficiency_identities);
  criterion(8, "planner arithmetic", 60.0, planner_arithmetic);
  criterion(9, "rank-divisibility detector", 60.0, divisibility_detector);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
