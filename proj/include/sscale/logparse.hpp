#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sscale {

// One node of the runtime timer breakdown printed by NekRS-style solvers.
// `fraction` and `count` are stored verbatim when present; the fraction's
// denominator is whatever the solver printed (not re-derived here).
struct TimerNode {
  std::string name;
  double seconds = 0.0;
  std::optional<double> fraction;
  std::optional<std::int64_t> count;
  int depth = 0;
  std::vector<TimerNode> children;
};

enum class Precision { FP64, FP32 };

// A kernel self-test line, e.g.
//   Ax: N=7 FP64 GDOF/s=13.2 GB/s=1260 GFLOPS=2184 kv0
struct KernelPerf {
  std::string kernel;  // "Ax", "fdm", ...
  int order = 0;       // spectral order N
  Precision precision = Precision::FP64;
  double gdof_per_s = 0.0;
  double gb_per_s = 0.0;
  double gflops = 0.0;
  std::string variant;  // chosen kernel version, e.g. "kv0"
};

enum class ProbeMode { Device, Host };  // pw+device / pw+host

// A communication self-test line:
//   pw+device (MPI: 7.37e-05s / bi-bw:  54.5GB/s/rank)
struct BandwidthProbe {
  ProbeMode mode = ProbeMode::Device;
  double mpi_seconds = 0.0;
  double bibw_gb_per_s_per_rank = 0.0;
};

struct LogReport {
  std::vector<TimerNode> timers;  // root-level timers, in file order
  std::vector<KernelPerf> kernels;
  std::vector<BandwidthProbe> probes;
  std::optional<double> solve_min;  // min/max step time under "solve"
  std::optional<double> solve_max;
  std::optional<double> aggregate_flops;  // the "flop/s" line
  int skipped_lines = 0;  // unrecognized non-blank lines
};

// Content equality; skipped_lines is diagnostic and not compared.
bool operator==(const LogReport& a, const LogReport& b);
bool operator==(const TimerNode& a, const TimerNode& b);
bool operator==(const KernelPerf& a, const KernelPerf& b);
bool operator==(const BandwidthProbe& a, const BandwidthProbe& b);

// Parses a logfile. Timer lines look like
//   <indent><name> <seconds>s [<fraction> [<count>]]
// with two spaces of indentation per tree level relative to the
// shallowest timer line; names may contain single internal spaces, so the
// time field is the last token that ends in 's' with a float in front.
// `min`/`max` under "solve" and `flop/s` lines populate the report's
// scalar fields instead of the tree. Kernel and bandwidth-probe lines are
// recognized by their prefixes. Anything else is skipped and counted;
// malformed numerics on recognized lines throw ParseError with the line
// number, as do lines longer than 4096 bytes.
LogReport parse_log(std::string_view text);

// Reads the file (IoError if unreadable) and parses it.
LogReport parse_log_file(const std::string& path);

// Resolves a node by exact name matches from the root, e.g.
// {"solve","pressureSolve","preconditioner","coarse grid"}. Throws if any
// step is missing or matches more than one sibling.
const TimerNode& find_timer(const LogReport& report,
                            std::span<const std::string> path);

// Warns for every parent whose children sum to more than 101% of the
// parent's own time. Children summing to less is normal (untimed gaps).
std::vector<std::string> timer_consistency(const LogReport& report);

// Canonical text layout; parse_log(to_text(r)) == r.
std::string to_text(const LogReport& report);

// Canonical JSON: keys timers[], kernels[], probes[], solve_min,
// solve_max, aggregate_flops, skipped_lines.
nlohmann::json to_json(const LogReport& report);

std::string to_string(Precision p);
std::string to_string(ProbeMode m);

}  // namespace sscale
