// Command-line front end for the strong-scaling analysis toolkit: run
// record ingestion, knee location, campaign planning, logfile comparison,
// anomaly detection, plotting, and synthetic data generation.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sscale/anomaly.hpp"
#include "sscale/error.hpp"
#include "sscale/io.hpp"
#include "sscale/logparse.hpp"
#include "sscale/planner.hpp"
#include "sscale/plot.hpp"
#include "sscale/scaling_model.hpp"
#include "sscale/store.hpp"
#include "sscale/synth.hpp"

namespace {

using nlohmann::json;
using namespace sscale;

struct GlobalOpts {
  std::string store_path;
  std::string format = "text";
  double eta_target = 0.8;
  int dof_multiplier = 1;
};

json knee_to_json(const KneeResult& k) {
  auto point = [](const EfficiencyPoint& p) {
    return json{{"P", p.ranks},
                {"n_over_p", p.n_over_p},
                {"eta", p.eta},
                {"mdofs", p.mdofs},
                {"t_step", p.t_step}};
  };
  return json{{"eta_target", k.eta_target},
              {"n_at_target", k.n_at_target},
              {"p_at_target", k.p_at_target},
              {"t_at_target", k.t_at_target},
              {"bracket_hi", point(k.bracket_hi)},
              {"bracket_lo", point(k.bracket_lo)},
              {"extrapolated", k.extrapolated}};
}

json plan_to_json(const CampaignPlan& p) {
  return json{{"n", p.gridpoints},
              {"n_at_target", p.n_at_target},
              {"eta_target", p.eta_target},
              {"P", p.ranks},
              {"ranks_per_node", p.ranks_per_node},
              {"nodes", p.nodes},
              {"nodes_whole", p.nodes_whole},
              {"t_step_est", p.t_step_est},
              {"steps", p.steps},
              {"node_hours", p.node_hours},
              {"node_hours_whole", p.node_hours_whole}};
}

std::string join_path(const std::vector<std::string>& path) {
  std::string s;
  for (const auto& p : path) s += s.empty() ? p : "/" + p;
  return s;
}

RunStore load_store_checked(const GlobalOpts& g) {
  if (g.store_path.empty()) {
    throw ValidationError("this command needs --store <path>");
  }
  return load_store(g.store_path);
}

void cmd_ingest(const GlobalOpts& g, const std::vector<std::string>& paths,
                const std::string& format) {
  if (g.store_path.empty()) {
    throw ValidationError("ingest needs --store <path> for its output");
  }
  std::vector<RunRecord> all;
  for (const auto& path : paths) {
    auto records = format == "json" ? read_records_json(path)
                                    : read_records_csv(path);
    if (records.empty()) {
      std::cerr << "warning: no records in " << path << "\n";
    }
    all.insert(all.end(), records.begin(), records.end());
  }
  const RunStore store = group_records(std::move(all));
  save_store(g.store_path, store);
  std::cout << "ingested " << store.record_count() << " records into "
            << store.series.size() << " series -> " << g.store_path << "\n";
}

void cmd_knee(const GlobalOpts& g, const std::string& selector,
              const std::string& json_out) {
  const RunStore store = load_store_checked(g);
  const ScalingSeries& series = select_one(store, parse_selector(selector));
  const auto points = efficiency_series(series, g.dof_multiplier);
  const KneeResult k = knee(series, g.eta_target, g.dof_multiplier);

  json j{{"series", series.problem_id},
         {"points", json::array()},
         {"knee", knee_to_json(k)}};
  for (const auto& p : points) {
    j["points"].push_back(json{{"P", p.ranks},
                               {"n_over_p", p.n_over_p},
                               {"eta", p.eta},
                               {"mdofs", p.mdofs},
                               {"t_step", p.t_step}});
  }
  if (!json_out.empty()) write_file_atomic(json_out, j.dump(2) + "\n");

  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "series: " << series.problem_id << "\n";
  std::cout << std::setw(10) << "P" << std::setw(16) << "n/P"
            << std::setw(14) << "t_step[s]" << std::setw(10) << "eta"
            << std::setw(12) << "MDOFS" << "\n";
  for (const auto& p : points) {
    std::cout << std::setw(10) << p.ranks << std::setw(16) << std::fixed
              << std::setprecision(1) << p.n_over_p << std::setw(14)
              << std::setprecision(6) << p.t_step << std::setw(10)
              << std::setprecision(4) << p.eta << std::setw(12)
              << std::setprecision(2) << p.mdofs << "\n";
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << std::setprecision(8);
  std::cout << "knee @ eta=" << k.eta_target << ": n/P = " << k.n_at_target
            << ", P = " << k.p_at_target << ", t_step = " << k.t_at_target
            << " s";
  if (k.extrapolated) {
    std::cout << "  [extrapolated: target not crossed, clamped to nearest "
                 "measured point]";
  }
  std::cout << "\n";
  if (!k.extrapolated) {
    std::cout << "  bracketed by P=" << k.bracket_hi.ranks
              << " (eta=" << k.bracket_hi.eta << ") and P="
              << k.bracket_lo.ranks << " (eta=" << k.bracket_lo.eta << ")\n";
  }
}

void cmd_plan(const GlobalOpts& g, const std::vector<std::int64_t>& ns,
              const std::string& selector, double n_at_target,
              double work_rate, double t_step_est,
              std::int64_t ranks_per_node, std::int64_t steps) {
  KneeResult k;
  double rate = work_rate;
  if (!selector.empty() && n_at_target > 0) {
    throw ValidationError("give either --select or --n-at-target, not both");
  }
  if (!selector.empty()) {
    const RunStore store = load_store_checked(g);
    const ScalingSeries& series = select_one(store, parse_selector(selector));
    k = knee(series, g.eta_target, g.dof_multiplier);
    if (rate <= 0) rate = fit_work_rate(series);
  } else {
    if (n_at_target <= 0) {
      throw ValidationError(
          "plan needs either --select or --n-at-target <gridpoints/rank>");
    }
    k.n_at_target = n_at_target;
    k.eta_target = g.eta_target;
  }
  if (t_step_est > 0) {
    rate = t_step_est * k.eta_target / k.n_at_target;
  }
  if (rate <= 0) {
    throw ValidationError("plan needs --work-rate or --t-step-est");
  }
  const auto plans = sweep(ns, k, ranks_per_node, steps, rate);

  if (g.format == "json") {
    json j = json::array();
    for (const auto& p : plans) j.push_back(plan_to_json(p));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "target: eta=" << k.eta_target << " at n/P=" << k.n_at_target
            << ", t_step=" << plans.front().t_step_est
            << " s (independent of n)\n";
  std::cout << std::setw(14) << "n" << std::setw(10) << "P" << std::setw(12)
            << "nodes" << std::setw(12) << "nodes(ceil)" << std::setw(14)
            << "node-hours" << std::setw(14) << "nh(ceil)" << "\n";
  for (const auto& p : plans) {
    std::cout << std::setw(14) << p.gridpoints << std::setw(10) << p.ranks
              << std::setw(12) << std::setprecision(6) << p.nodes
              << std::setw(12) << p.nodes_whole << std::setw(14)
              << p.node_hours << std::setw(14) << p.node_hours_whole << "\n";
  }
}

void cmd_compare_logs(const GlobalOpts& g, const std::string& path_a,
                      const std::string& path_b, double threshold) {
  const LogReport a = parse_log_file(path_a);
  const LogReport b = parse_log_file(path_b);
  const RegressionReport rep = section_regression(a, b, threshold);

  if (g.format == "json") {
    json j{{"threshold", threshold},
           {"regressions", json::array()},
           {"only_in_a", json::array()},
           {"only_in_b", json::array()},
           {"kernels_a", json::array()},
           {"kernels_b", json::array()},
           {"probes_a", json::array()},
           {"probes_b", json::array()}};
    for (const auto& r : rep.regressions) {
      j["regressions"].push_back(json{{"path", r.path},
                                      {"seconds_a", r.seconds_a},
                                      {"seconds_b", r.seconds_b},
                                      {"ratio", r.ratio},
                                      {"flagged", r.flagged}});
    }
    for (const auto& p : rep.only_in_a) j["only_in_a"].push_back(p);
    for (const auto& p : rep.only_in_b) j["only_in_b"].push_back(p);
    j["kernels_a"] = to_json(a)["kernels"];
    j["kernels_b"] = to_json(b)["kernels"];
    j["probes_a"] = to_json(a)["probes"];
    j["probes_b"] = to_json(b)["probes"];
    std::cout << j.dump(2) << "\n";
    return;
  }

  std::cout << "section timings, B vs A (flag threshold " << threshold
            << "x):\n";
  std::cout << std::setw(10) << "ratio" << std::setw(14) << "A[s]"
            << std::setw(14) << "B[s]" << "  path\n";
  for (const auto& r : rep.regressions) {
    std::cout << std::setw(10) << std::setprecision(4) << r.ratio
              << std::setw(14) << r.seconds_a << std::setw(14) << r.seconds_b
              << "  " << join_path(r.path) << (r.flagged ? "  <-- flagged" : "")
              << "\n";
  }
  for (const auto& p : rep.only_in_a) {
    std::cout << "only in A: " << join_path(p) << "\n";
  }
  for (const auto& p : rep.only_in_b) {
    std::cout << "only in B: " << join_path(p) << "\n";
  }

  const std::size_t kn = std::max(a.kernels.size(), b.kernels.size());
  if (kn > 0) {
    std::cout << "\nkernel performance (GFLOPS):\n";
    std::cout << std::setw(26) << "kernel" << std::setw(12) << "A"
              << std::setw(12) << "B" << std::setw(10) << "B/A" << "\n";
    for (std::size_t i = 0; i < kn; ++i) {
      std::ostringstream name;
      if (i < a.kernels.size()) {
        const auto& k = a.kernels[i];
        name << k.kernel << " N=" << k.order << ' ' << to_string(k.precision);
      } else {
        const auto& k = b.kernels[i];
        name << k.kernel << " N=" << k.order << ' ' << to_string(k.precision);
      }
      std::cout << std::setw(26) << name.str();
      if (i < a.kernels.size()) {
        std::cout << std::setw(12) << a.kernels[i].gflops;
      } else {
        std::cout << std::setw(12) << "-";
      }
      if (i < b.kernels.size()) {
        std::cout << std::setw(12) << b.kernels[i].gflops;
      } else {
        std::cout << std::setw(12) << "-";
      }
      if (i < a.kernels.size() && i < b.kernels.size()) {
        std::cout << std::setw(10) << std::setprecision(3)
                  << b.kernels[i].gflops / a.kernels[i].gflops;
      }
      std::cout << "\n";
    }
  }

  const std::size_t pn = std::max(a.probes.size(), b.probes.size());
  if (pn > 0) {
    std::cout << "\nbandwidth probes (GB/s/rank):\n";
    std::cout << std::setw(12) << "mode" << std::setw(12) << "A"
              << std::setw(12) << "B" << "\n";
    for (std::size_t i = 0; i < pn; ++i) {
      const std::string mode = i < a.probes.size()
                                   ? to_string(a.probes[i].mode)
                                   : to_string(b.probes[i].mode);
      std::cout << std::setw(12) << mode;
      if (i < a.probes.size()) {
        std::cout << std::setw(12) << a.probes[i].bibw_gb_per_s_per_rank;
      } else {
        std::cout << std::setw(12) << "-";
      }
      if (i < b.probes.size()) {
        std::cout << std::setw(12) << b.probes[i].bibw_gb_per_s_per_rank;
      } else {
        std::cout << std::setw(12) << "-";
      }
      std::cout << "\n";
    }
  }
}

void cmd_divisibility(const GlobalOpts& g, const std::string& csv_path,
                      const std::string& selector, std::int64_t divisor,
                      double slowdown_threshold) {
  std::vector<RunRecord> records;
  if (!csv_path.empty()) {
    records = read_records_csv(csv_path);
  } else {
    const RunStore store = load_store_checked(g);
    const ScalingSeries& series = select_one(store, parse_selector(selector));
    records = series.records;
  }
  const DivisibilitySplit split =
      rank_divisibility(records, divisor, slowdown_threshold);

  if (g.format == "json") {
    json j{{"divisor", split.divisor},
           {"aligned_count", split.aligned.records.size()},
           {"misaligned_count", split.misaligned.records.size()},
           {"slowdown", split.slowdown ? json(*split.slowdown) : nullptr},
           {"flagged", split.flagged}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "rank divisibility by " << split.divisor << ": "
            << split.aligned.records.size() << " aligned, "
            << split.misaligned.records.size() << " misaligned\n";
  if (split.slowdown) {
    std::cout << "misaligned median slowdown: " << std::setprecision(4)
              << *split.slowdown
              << (split.flagged ? "x  <-- flagged" : "x") << "\n";
  } else {
    std::cout << "slowdown undefined (one class is empty)\n";
  }
}

void cmd_speedup(const GlobalOpts& g, const std::string& csv_path,
                 const std::string& reference,
                 const std::vector<std::string>& claimed_kv) {
  const auto records = read_records_csv(csv_path);
  const RunRecord* ref = nullptr;
  for (const auto& r : records) {
    if (r.platform == reference) {
      if (ref != nullptr) {
        throw ValidationError("reference platform '" + reference +
                              "' matches multiple records");
      }
      ref = &r;
    }
  }
  if (ref == nullptr) {
    throw ValidationError("reference platform '" + reference +
                          "' not found in " + csv_path);
  }
  std::map<std::string, double> claimed;
  for (const auto& kv : claimed_kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("bad --claimed entry '" + kv +
                            "' (use platform=value)");
    }
    claimed[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  const auto rows = platform_speedup(*ref, records, claimed);

  if (g.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back(json{{"platform", r.platform},
                       {"t_step", r.t_step},
                       {"computed_speedup", r.computed_speedup},
                       {"claimed_speedup", r.claimed_speedup
                                               ? json(*r.claimed_speedup)
                                               : nullptr},
                       {"consistent", r.consistent}});
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "speedup vs " << reference << " (inverse t_step ratio):\n";
  std::cout << std::setw(14) << "platform" << std::setw(12) << "t_step"
            << std::setw(12) << "computed" << std::setw(12) << "claimed"
            << "\n";
  for (const auto& r : rows) {
    std::cout << std::setw(14) << r.platform << std::setw(12)
              << std::setprecision(4) << r.t_step << std::setw(12)
              << std::setprecision(3) << r.computed_speedup;
    if (r.claimed_speedup) {
      std::cout << std::setw(12) << *r.claimed_speedup
                << (r.consistent ? "" : "  <-- inconsistent");
    } else {
      std::cout << std::setw(12) << "-";
    }
    std::cout << "\n";
  }
}

void cmd_plot(const GlobalOpts& g, const std::string& selector,
              const std::string& kind_str, const std::string& out_path,
              bool ideal) {
  const RunStore store = load_store_checked(g);
  const auto matches = select(store, parse_selector(selector));
  if (matches.empty()) throw ValidationError("no series matches the selector");
  const PlotKind kind = plot_kind_from_string(kind_str);
  PlotSpec spec = make_plot_spec(kind, matches, g.dof_multiplier);
  spec.ideal_guide = ideal;
  if (kind == PlotKind::EtaVsWork) spec.eta_reference = g.eta_target;

  std::string csv_path = out_path;
  if (csv_path.size() > 4 && csv_path.substr(csv_path.size() - 4) == ".svg") {
    csv_path = csv_path.substr(0, csv_path.size() - 4) + ".csv";
  } else {
    csv_path += ".csv";
  }
  write_file_atomic(out_path, render_svg(spec));
  write_file_atomic(csv_path, points_csv(spec));
  std::cout << "wrote " << out_path << " and " << csv_path << " ("
            << spec.series.size() << " series)\n";
}

void cmd_synth(const CostModel& model, std::int64_t n,
               const std::vector<std::int64_t>& ranks,
               const GenerateOptions& opts, const std::string& out_path) {
  const ScalingSeries series = generate(model, n, ranks, opts);
  write_records_csv(out_path, series.records);
  std::cout << "wrote " << series.records.size() << " records to "
            << out_path << "\n";
}

void cmd_parse_log(const std::string& path, const std::string& out_path) {
  const LogReport report = parse_log_file(path);
  const std::string text = to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong-scaling analysis for GPU-era HPC runs"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--store", g.store_path, "run store (JSON) path");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--eta-target", g.eta_target, "target parallel efficiency")
      ->capture_default_str();
  app.add_option("--dof-multiplier", g.dof_multiplier,
                 "dofs per grid point (1 or 4)")
      ->check(CLI::IsMember({"1", "4"}))
      ->capture_default_str();

  // ingest
  auto* ingest = app.add_subcommand("ingest", "load run records into a store");
  ingest->fallthrough();
  std::vector<std::string> ingest_paths;
  std::string ingest_format = "csv";
  ingest->add_option("paths", ingest_paths, "record files")->required();
  ingest->add_option("--input-format", ingest_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  ingest->callback([&] { cmd_ingest(g, ingest_paths, ingest_format); });

  // knee
  auto* kneecmd = app.add_subcommand("knee", "locate the efficiency knee");
  kneecmd->fallthrough();
  std::string knee_select, knee_json_out;
  kneecmd->add_option("--select", knee_select,
                      "series selector (platform=,config~,n=)")
      ->required();
  kneecmd->add_option("--json-out", knee_json_out,
                      "also write the JSON report here");
  kneecmd->callback([&] { cmd_knee(g, knee_select, knee_json_out); });

  // plan
  auto* plancmd = app.add_subcommand("plan", "estimate ranks and node-hours");
  plancmd->fallthrough();
  std::vector<std::int64_t> plan_ns;
  std::string plan_select;
  double plan_n_at = 0, plan_rate = 0, plan_tstep = 0;
  std::int64_t plan_rpn = 0, plan_steps = 0;
  plancmd->add_option("--n", plan_ns, "problem sizes (gridpoints)")
      ->required();
  plancmd->add_option("--select", plan_select,
                      "series selector to fit the knee from");
  plancmd->add_option("--n-at-target", plan_n_at,
                      "knee n/P when no series is given");
  plancmd->add_option("--work-rate", plan_rate,
                      "seconds per gridpoint per rank-step");
  plancmd->add_option("--t-step-est", plan_tstep,
                      "target time per step (overrides --work-rate)");
  plancmd->add_option("--ranks-per-node", plan_rpn, "ranks per node")
      ->required();
  plancmd->add_option("--steps", plan_steps, "campaign timesteps")
      ->required();
  plancmd->callback([&] {
    cmd_plan(g, plan_ns, plan_select, plan_n_at, plan_rate, plan_tstep,
             plan_rpn, plan_steps);
  });

  // compare-logs
  auto* cmp = app.add_subcommand("compare-logs",
                                 "section regressions between two logfiles");
  cmp->fallthrough();
  std::string cmp_a, cmp_b;
  double cmp_threshold = 1.5;
  cmp->add_option("log_a", cmp_a, "baseline logfile")->required();
  cmp->add_option("log_b", cmp_b, "comparison logfile")->required();
  cmp->add_option("--threshold", cmp_threshold, "flag ratio threshold")
      ->capture_default_str();
  cmp->callback([&] { cmd_compare_logs(g, cmp_a, cmp_b, cmp_threshold); });

  // divisibility
  auto* divcmd = app.add_subcommand(
      "divisibility", "detect rank-divisibility slowdowns");
  divcmd->fallthrough();
  std::string div_csv, div_select;
  std::int64_t div_divisor = 8;
  double div_threshold = 1.25;
  divcmd->add_option("--csv", div_csv, "record CSV (instead of --select)");
  divcmd->add_option("--select", div_select, "series selector");
  divcmd->add_option("--divisor", div_divisor, "rank divisor")
      ->capture_default_str();
  divcmd->add_option("--slowdown-threshold", div_threshold,
                     "flag threshold on the median slowdown")
      ->capture_default_str();
  divcmd->callback([&] {
    cmd_divisibility(g, div_csv, div_select, div_divisor, div_threshold);
  });

  // speedup
  auto* spd = app.add_subcommand("speedup",
                                 "platform speedups from t_step ratios");
  spd->fallthrough();
  std::string spd_csv, spd_ref;
  std::vector<std::string> spd_claimed;
  spd->add_option("--csv", spd_csv, "record CSV of same-problem runs")
      ->required();
  spd->add_option("--reference", spd_ref, "reference platform")->required();
  spd->add_option("--claimed", spd_claimed,
                  "claimed speedups to verify, platform=value");
  spd->callback([&] { cmd_speedup(g, spd_csv, spd_ref, spd_claimed); });

  // plot
  auto* plotcmd = app.add_subcommand("plot", "emit an SVG plot + CSV points");
  plotcmd->fallthrough();
  std::string plot_select, plot_kind = "tstep_vs_nP", plot_out;
  bool plot_ideal = false;
  plotcmd->add_option("--select", plot_select,
                      "series selector (may match several; empty = all)");
  plotcmd->add_option("--kind", plot_kind,
                      "tstep_vs_P | tstep_vs_nP | eta_vs_nP | dof_throughput")
      ->capture_default_str();
  plotcmd->add_option("--out", plot_out, "output SVG path")->required();
  plotcmd->add_flag("--ideal", plot_ideal, "draw ideal-scaling guides");
  plotcmd->callback(
      [&] { cmd_plot(g, plot_select, plot_kind, plot_out, plot_ideal); });

  // synth
  auto* syn = app.add_subcommand("synth", "generate synthetic scaling data");
  syn->fallthrough();
  CostModel model;
  std::int64_t syn_n = 0;
  std::vector<std::int64_t> syn_ranks;
  GenerateOptions syn_opts;
  std::string syn_out;
  syn->add_option("--n", syn_n, "total gridpoints")->required();
  syn->add_option("--ranks", syn_ranks, "rank counts, ascending")
      ->required()
      ->delimiter(',');
  syn->add_option("--compute-coeff,-a", model.compute_coeff,
                  "seconds per gridpoint per rank-step")
      ->required();
  syn->add_option("--overhead,-b", model.overhead, "fixed seconds per step")
      ->capture_default_str();
  syn->add_option("--log2-coeff,-c", model.log2_coeff,
                  "seconds per log2(P)")
      ->capture_default_str();
  syn->add_option("--noise", model.noise_rel, "relative noise amplitude")
      ->capture_default_str();
  syn->add_option("--seed", model.seed, "noise seed")->capture_default_str();
  syn->add_option("--platform", syn_opts.platform, "platform label")
      ->capture_default_str();
  syn->add_option("--config", syn_opts.config, "config tags");
  syn->add_option("--ranks-per-node", syn_opts.ranks_per_node,
                  "ranks per node")
      ->capture_default_str();
  syn->add_option("--steps-timed", syn_opts.steps_timed,
                  "steps_timed column value")
      ->capture_default_str();
  syn->add_option("--out", syn_out, "output CSV path")->required();
  syn->callback(
      [&] { cmd_synth(model, syn_n, syn_ranks, syn_opts, syn_out); });

  // parse-log
  auto* pl = app.add_subcommand("parse-log", "dump a logfile report as JSON");
  pl->fallthrough();
  std::string pl_path, pl_out;
  pl->add_option("logfile", pl_path, "logfile path")->required();
  pl->add_option("--out", pl_out, "write JSON here instead of stdout");
  pl->callback([&] { cmd_parse_log(pl_path, pl_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
