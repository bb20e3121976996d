#include "sscale/logparse.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "sscale/error.hpp"
#include "sscale/io.hpp"

namespace sscale {

namespace {

constexpr std::size_t kMaxLineBytes = 4096;

bool parse_double_full(std::string_view s, double& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool parse_int_full(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

int leading_spaces(std::string_view line) {
  int n = 0;
  while (std::size_t(n) < line.size() && line[n] == ' ') ++n;
  return n;
}

// A timer-shaped line after tokenization: the time field is the last token
// ending in 's' whose prefix parses as a float; tokens before it form the
// name, tokens after are fraction then count.
struct TimerLine {
  int line_no = 0;
  int spaces = 0;
  std::string name;
  double seconds = 0.0;
  std::optional<double> fraction;
  std::optional<std::int64_t> count;
  bool special = false;  // "min" / "max"
};

bool match_timer_shape(int line_no, int spaces,
                       const std::vector<std::string_view>& toks,
                       TimerLine& out) {
  int time_idx = -1;
  double seconds = 0.0;
  for (int i = int(toks.size()) - 1; i >= 1; --i) {
    const std::string_view t = toks[std::size_t(i)];
    if (t.size() < 2 || t.back() != 's') continue;
    double v = 0.0;
    if (parse_double_full(t.substr(0, t.size() - 1), v)) {
      time_idx = i;
      seconds = v;
      break;
    }
  }
  if (time_idx < 0) return false;
  const std::size_t trailing = toks.size() - std::size_t(time_idx) - 1;
  if (trailing > 2) return false;

  TimerLine line;
  line.line_no = line_no;
  line.spaces = spaces;
  line.seconds = seconds;
  for (int i = 0; i < time_idx; ++i) {
    if (i > 0) line.name += ' ';
    line.name += toks[std::size_t(i)];
  }
  if (trailing >= 1) {
    double frac = 0.0;
    if (!parse_double_full(toks[std::size_t(time_idx) + 1], frac)) return false;
    if (frac < 0.0 || frac > 1.05) return false;  // not a timer fraction
    line.fraction = frac;
  }
  if (trailing == 2) {
    std::int64_t count = 0;
    if (!parse_int_full(toks[std::size_t(time_idx) + 2], count)) return false;
    line.count = count;
  }
  line.special = line.name == "min" || line.name == "max";
  out = std::move(line);
  return true;
}

// key=value token, where the value may spill into the next token when the
// solver pads the field (e.g. "GB/s= 812").
double take_kv(int line_no, const std::vector<std::string_view>& toks,
               std::size_t& i, std::string_view key) {
  if (i >= toks.size()) {
    throw ParseError(line_no, "missing " + std::string(key) + "= field");
  }
  const std::string_view tok = toks[i];
  if (tok.substr(0, key.size()) != key || tok.size() <= key.size() ||
      tok[key.size()] != '=') {
    throw ParseError(line_no, "expected " + std::string(key) + "= field");
  }
  std::string_view value = tok.substr(key.size() + 1);
  ++i;
  if (value.empty()) {
    if (i >= toks.size()) {
      throw ParseError(line_no, "missing value for " + std::string(key));
    }
    value = toks[i++];
  }
  double v = 0.0;
  if (!parse_double_full(value, v)) {
    throw ParseError(line_no,
                     "bad numeric value for " + std::string(key) + ": '" +
                         std::string(value) + "'");
  }
  return v;
}

KernelPerf parse_kernel_line(int line_no,
                             const std::vector<std::string_view>& toks) {
  KernelPerf k;
  k.kernel = std::string(toks[0].substr(0, toks[0].size() - 1));
  std::size_t i = 1;
  k.order = int(take_kv(line_no, toks, i, "N"));
  if (i >= toks.size()) throw ParseError(line_no, "missing precision field");
  if (toks[i] == "FP64") {
    k.precision = Precision::FP64;
  } else if (toks[i] == "FP32") {
    k.precision = Precision::FP32;
  } else {
    throw ParseError(line_no,
                     "unknown precision '" + std::string(toks[i]) + "'");
  }
  ++i;
  k.gdof_per_s = take_kv(line_no, toks, i, "GDOF/s");
  k.gb_per_s = take_kv(line_no, toks, i, "GB/s");
  k.gflops = take_kv(line_no, toks, i, "GFLOPS");
  if (i >= toks.size()) throw ParseError(line_no, "missing kernel variant");
  k.variant = std::string(toks[i]);
  if (!(k.gdof_per_s > 0) || !(k.gb_per_s > 0) || !(k.gflops > 0)) {
    throw ParseError(line_no, "kernel rates must be positive");
  }
  return k;
}

BandwidthProbe parse_probe_line(int line_no,
                                const std::vector<std::string_view>& toks) {
  BandwidthProbe p;
  p.mode = toks[0] == "pw+device" ? ProbeMode::Device : ProbeMode::Host;
  if (toks.size() < 6 || toks[1] != "(MPI:" || toks[3] != "/" ||
      toks[4] != "bi-bw:") {
    throw ParseError(line_no, "malformed bandwidth probe line");
  }
  const std::string_view secs = toks[2];
  if (secs.size() < 2 || secs.back() != 's' ||
      !parse_double_full(secs.substr(0, secs.size() - 1), p.mpi_seconds)) {
    throw ParseError(line_no, "bad MPI time in probe line");
  }
  constexpr std::string_view kSuffix = "GB/s/rank)";
  const std::string_view bw = toks[5];
  if (bw.size() <= kSuffix.size() ||
      bw.substr(bw.size() - kSuffix.size()) != kSuffix ||
      !parse_double_full(bw.substr(0, bw.size() - kSuffix.size()),
                         p.bibw_gb_per_s_per_rank)) {
    throw ParseError(line_no, "bad bandwidth in probe line");
  }
  if (!(p.mpi_seconds > 0) || !(p.bibw_gb_per_s_per_rank > 0)) {
    throw ParseError(line_no, "probe values must be positive");
  }
  return p;
}

std::vector<TimerNode>* container_at(std::vector<TimerNode>& roots,
                                     const std::vector<std::size_t>& path,
                                     std::size_t depth) {
  std::vector<TimerNode>* c = &roots;
  for (std::size_t i = 0; i < depth; ++i) c = &(*c)[path[i]].children;
  return c;
}

}  // namespace

LogReport parse_log(std::string_view text) {
  LogReport report;
  std::vector<TimerLine> timer_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.size() > kMaxLineBytes) {
      throw ParseError(line_no, "line exceeds 4096 bytes");
    }
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;  // blank lines are not counted as skipped

    if (toks[0] == "pw+device" || toks[0] == "pw+host") {
      report.probes.push_back(parse_probe_line(line_no, toks));
      continue;
    }
    if (toks.size() >= 2 && toks[0].size() > 1 && toks[0].back() == ':' &&
        toks[1].substr(0, 2) == "N=") {
      report.kernels.push_back(parse_kernel_line(line_no, toks));
      continue;
    }
    if (toks[0] == "flop/s") {
      // Value first; a trailing per-rank annotation like "(701
      // GFLOPS/rank)" is tolerated and ignored.
      double v = 0.0;
      if (toks.size() < 2 || !parse_double_full(toks[1], v)) {
        throw ParseError(line_no, "bad flop/s value");
      }
      report.aggregate_flops = v;
      continue;
    }
    TimerLine tl;
    if (match_timer_shape(line_no, leading_spaces(line), toks, tl)) {
      timer_lines.push_back(std::move(tl));
      continue;
    }
    ++report.skipped_lines;
  }

  if (timer_lines.empty()) return report;

  // Depth is floor(spaces/2) relative to the shallowest timer line, which
  // tolerates the "name  time" header and listing-wide indentation.
  int min_spaces = -1;
  for (const auto& t : timer_lines) {
    if (t.special) continue;
    if (min_spaces < 0 || t.spaces < min_spaces) min_spaces = t.spaces;
  }
  if (min_spaces < 0) min_spaces = timer_lines.front().spaces;
  const int base_depth = min_spaces / 2;

  std::vector<std::size_t> path;  // index chain to the most recent node
  for (const auto& t : timer_lines) {
    const int raw_depth = t.spaces / 2 - base_depth;
    const std::size_t depth =
        std::size_t(std::max(raw_depth, 0));
    if (t.special) {
      // min/max only have meaning directly under a "solve" timer.
      const std::size_t cd = std::min(depth, path.size());
      const TimerNode* parent = nullptr;
      if (cd >= 1) {
        auto* c = container_at(report.timers, path, cd - 1);
        parent = &(*c)[path[cd - 1]];
      }
      if (parent != nullptr && parent->name == "solve") {
        if (t.name == "min") {
          report.solve_min = t.seconds;
        } else {
          report.solve_max = t.seconds;
        }
      } else {
        ++report.skipped_lines;
      }
      continue;
    }
    const std::size_t cd = std::min(depth, path.size());
    path.resize(cd);
    auto* container = container_at(report.timers, path, cd);
    TimerNode node;
    node.name = t.name;
    node.seconds = t.seconds;
    node.fraction = t.fraction;
    node.count = t.count;
    node.depth = int(cd);
    container->push_back(std::move(node));
    path.push_back(container->size() - 1);
  }
  return report;
}

LogReport parse_log_file(const std::string& path) {
  return parse_log(read_file(path));
}

const TimerNode& find_timer(const LogReport& report,
                            std::span<const std::string> path) {
  if (path.empty()) throw ValidationError("empty timer path");
  const std::vector<TimerNode>* level = &report.timers;
  const TimerNode* node = nullptr;
  std::string walked;
  for (const auto& name : path) {
    walked += walked.empty() ? name : "/" + name;
    const TimerNode* match = nullptr;
    for (const auto& candidate : *level) {
      if (candidate.name != name) continue;
      if (match != nullptr) {
        throw ValidationError("timer path is ambiguous at '" + walked + "'");
      }
      match = &candidate;
    }
    if (match == nullptr) {
      throw ValidationError("timer not found: '" + walked + "'");
    }
    node = match;
    level = &node->children;
  }
  return *node;
}

namespace {
void check_node(const TimerNode& node, std::string path,
                std::vector<std::string>& warnings) {
  path += path.empty() ? node.name : "/" + node.name;
  if (!node.children.empty()) {
    double child_sum = 0.0;
    for (const auto& c : node.children) child_sum += c.seconds;
    if (child_sum > node.seconds * 1.01) {
      std::ostringstream msg;
      msg << path << ": children sum to " << child_sum
          << " s, more than the parent's " << node.seconds << " s";
      warnings.push_back(msg.str());
    }
  }
  for (const auto& c : node.children) check_node(c, path, warnings);
}
}  // namespace

std::vector<std::string> timer_consistency(const LogReport& report) {
  std::vector<std::string> warnings;
  for (const auto& root : report.timers) check_node(root, "", warnings);
  if (report.solve_min && report.solve_max &&
      *report.solve_min > *report.solve_max) {
    std::ostringstream msg;
    msg << "solve: min step time " << *report.solve_min
        << " s exceeds max " << *report.solve_max << " s";
    warnings.push_back(msg.str());
  }
  return warnings;
}

namespace {
void emit_timer(std::ostringstream& out, const TimerNode& node,
                const LogReport& report) {
  const std::string indent(std::size_t(2 * (node.depth + 1)), ' ');
  std::string head = indent + node.name;
  if (head.size() < 24) {
    head.resize(24, ' ');
  } else {
    head += ' ';
  }
  out << head << format_double(node.seconds) << 's';
  if (node.fraction) out << "  " << format_double(*node.fraction);
  if (node.count) out << "  " << format_int(*node.count);
  out << '\n';
  if (node.name == "solve" && node.depth == 0) {
    const std::string sub(std::size_t(2 * (node.depth + 2)), ' ');
    auto scalar = [&](const char* name, double v, bool seconds_unit) {
      std::string line = sub + name;
      if (line.size() < 24) {
        line.resize(24, ' ');
      } else {
        line += ' ';
      }
      out << line << format_double(v) << (seconds_unit ? "s" : "") << '\n';
    };
    if (report.solve_min) scalar("min", *report.solve_min, true);
    if (report.solve_max) scalar("max", *report.solve_max, true);
    if (report.aggregate_flops) scalar("flop/s", *report.aggregate_flops, false);
  }
  for (const auto& c : node.children) emit_timer(out, c, report);
}

bool has_root_named(const LogReport& report, std::string_view name) {
  for (const auto& t : report.timers) {
    if (t.name == name) return true;
  }
  return false;
}
}  // namespace

std::string to_text(const LogReport& report) {
  std::ostringstream out;
  if (!report.timers.empty()) {
    out << "name                    time\n";
    for (const auto& root : report.timers) emit_timer(out, root, report);
  }
  if (report.aggregate_flops && !has_root_named(report, "solve")) {
    out << "flop/s  " << format_double(*report.aggregate_flops) << '\n';
  }
  if (!report.probes.empty()) {
    out << '\n';
    for (const auto& p : report.probes) {
      out << to_string(p.mode) << " (MPI: " << format_double(p.mpi_seconds)
          << "s / bi-bw: " << format_double(p.bibw_gb_per_s_per_rank)
          << "GB/s/rank)\n";
    }
  }
  if (!report.kernels.empty()) {
    out << '\n';
    for (const auto& k : report.kernels) {
      out << k.kernel << ": N=" << k.order << ' ' << to_string(k.precision)
          << " GDOF/s=" << format_double(k.gdof_per_s)
          << " GB/s=" << format_double(k.gb_per_s)
          << " GFLOPS=" << format_double(k.gflops) << ' ' << k.variant
          << '\n';
    }
  }
  return out.str();
}

namespace {
nlohmann::json node_to_json(const TimerNode& n) {
  nlohmann::json j;
  j["name"] = n.name;
  j["seconds"] = n.seconds;
  j["fraction"] = n.fraction ? nlohmann::json(*n.fraction) : nullptr;
  j["count"] = n.count ? nlohmann::json(*n.count) : nullptr;
  j["depth"] = n.depth;
  j["children"] = nlohmann::json::array();
  for (const auto& c : n.children) j["children"].push_back(node_to_json(c));
  return j;
}
}  // namespace

nlohmann::json to_json(const LogReport& report) {
  nlohmann::json j;
  j["timers"] = nlohmann::json::array();
  for (const auto& t : report.timers) j["timers"].push_back(node_to_json(t));
  j["kernels"] = nlohmann::json::array();
  for (const auto& k : report.kernels) {
    j["kernels"].push_back({{"kernel", k.kernel},
                            {"N", k.order},
                            {"precision", to_string(k.precision)},
                            {"gdof_per_s", k.gdof_per_s},
                            {"gb_per_s", k.gb_per_s},
                            {"gflops", k.gflops},
                            {"variant", k.variant}});
  }
  j["probes"] = nlohmann::json::array();
  for (const auto& p : report.probes) {
    j["probes"].push_back(
        {{"mode", to_string(p.mode)},
         {"mpi_seconds", p.mpi_seconds},
         {"bibw_gb_per_s_per_rank", p.bibw_gb_per_s_per_rank}});
  }
  j["solve_min"] = report.solve_min ? nlohmann::json(*report.solve_min) : nullptr;
  j["solve_max"] = report.solve_max ? nlohmann::json(*report.solve_max) : nullptr;
  j["aggregate_flops"] =
      report.aggregate_flops ? nlohmann::json(*report.aggregate_flops) : nullptr;
  j["skipped_lines"] = report.skipped_lines;
  return j;
}

bool operator==(const TimerNode& a, const TimerNode& b) {
  return a.name == b.name && a.seconds == b.seconds &&
         a.fraction == b.fraction && a.count == b.count &&
         a.depth == b.depth && a.children == b.children;
}

bool operator==(const KernelPerf& a, const KernelPerf& b) {
  return a.kernel == b.kernel && a.order == b.order &&
         a.precision == b.precision && a.gdof_per_s == b.gdof_per_s &&
         a.gb_per_s == b.gb_per_s && a.gflops == b.gflops &&
         a.variant == b.variant;
}

bool operator==(const BandwidthProbe& a, const BandwidthProbe& b) {
  return a.mode == b.mode && a.mpi_seconds == b.mpi_seconds &&
         a.bibw_gb_per_s_per_rank == b.bibw_gb_per_s_per_rank;
}

bool operator==(const LogReport& a, const LogReport& b) {
  return a.timers == b.timers && a.kernels == b.kernels &&
         a.probes == b.probes && a.solve_min == b.solve_min &&
         a.solve_max == b.solve_max && a.aggregate_flops == b.aggregate_flops;
}

std::string to_string(Precision p) {
  return p == Precision::FP64 ? "FP64" : "FP32";
}

std::string to_string(ProbeMode m) {
  return m == ProbeMode::Device ? "pw+device" : "pw+host";
}

}  // namespace sscale
