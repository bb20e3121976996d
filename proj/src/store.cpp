#include "sscale/store.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

#include "sscale/error.hpp"
#include "sscale/io.hpp"

namespace sscale {

using nlohmann::json;

const char* const kRunCsvHeader =
    "platform,config,P,ranks_per_node,n,E,N,t_step,steps_timed,v_iters,"
    "p_iters,flops_per_rank";

std::size_t RunStore::record_count() const {
  std::size_t n = 0;
  for (const auto& s : series) n += s.records.size();
  return n;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
}

double parse_double_cell(const std::string& cell, int row,
                         const char* column) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
    throw ValidationError("row " + std::to_string(row) + ": bad numeric '" +
                          cell + "' in column " + column);
  }
  return v;
}

std::int64_t parse_int_cell(const std::string& cell, int row,
                            const char* column) {
  std::int64_t v = 0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
    throw ValidationError("row " + std::to_string(row) + ": bad integer '" +
                          cell + "' in column " + column);
  }
  return v;
}

RunRecord record_from_row(const std::vector<std::string>& cells, int row) {
  RunRecord r;
  r.platform = cells[0];
  if (!cells[1].empty()) {
    for (auto& tag : split(cells[1], ';')) {
      if (!tag.empty()) r.config.push_back(std::move(tag));
    }
  }
  r.ranks = parse_int_cell(cells[2], row, "P");
  r.ranks_per_node = parse_int_cell(cells[3], row, "ranks_per_node");
  r.gridpoints = parse_int_cell(cells[4], row, "n");
  if (!cells[5].empty()) r.elements = parse_int_cell(cells[5], row, "E");
  if (!cells[6].empty())
    r.poly_order = int(parse_int_cell(cells[6], row, "N"));
  r.t_step = parse_double_cell(cells[7], row, "t_step");
  r.steps_timed = parse_int_cell(cells[8], row, "steps_timed");
  if (!cells[9].empty())
    r.v_iters = parse_double_cell(cells[9], row, "v_iters");
  if (!cells[10].empty())
    r.p_iters = parse_double_cell(cells[10], row, "p_iters");
  if (!cells[11].empty())
    r.flops_per_rank = parse_double_cell(cells[11], row, "flops_per_rank");
  normalize_config(r);
  try {
    validate(r);
  } catch (const ValidationError& e) {
    throw ValidationError("row " + std::to_string(row) + ": " + e.what());
  }
  return r;
}

}  // namespace

std::vector<RunRecord> records_from_csv(std::string_view text) {
  std::vector<RunRecord> records;
  std::vector<std::string> lines;
  for (auto& line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) return records;  // empty input: empty store, no error

  if (lines[0] != kRunCsvHeader) {
    throw ValidationError(std::string("row 1: expected header '") +
                          kRunCsvHeader + "'");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int row = int(i) + 1;
    if (lines[i].empty()) continue;
    const auto cells = split(lines[i], ',');
    if (cells.size() != 12) {
      throw ValidationError("row " + std::to_string(row) + ": expected 12 " +
                            "columns, got " + std::to_string(cells.size()));
    }
    records.push_back(record_from_row(cells, row));
  }
  return records;
}

std::string records_to_csv(std::span<const RunRecord> records) {
  std::ostringstream out;
  out << kRunCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.platform << ',';
    for (std::size_t i = 0; i < r.config.size(); ++i) {
      if (i > 0) out << ';';
      out << r.config[i];
    }
    out << ',' << format_int(r.ranks) << ',' << format_int(r.ranks_per_node)
        << ',' << format_int(r.gridpoints) << ',';
    if (r.elements) out << format_int(*r.elements);
    out << ',';
    if (r.poly_order) out << format_int(*r.poly_order);
    out << ',' << format_double(r.t_step) << ','
        << format_int(r.steps_timed) << ',';
    if (r.v_iters) out << format_double(*r.v_iters);
    out << ',';
    if (r.p_iters) out << format_double(*r.p_iters);
    out << ',';
    if (r.flops_per_rank) out << format_double(*r.flops_per_rank);
    out << '\n';
  }
  return out.str();
}

std::vector<RunRecord> read_records_csv(const std::string& path) {
  return records_from_csv(read_file(path));
}

void write_records_csv(const std::string& path,
                       std::span<const RunRecord> records) {
  write_file_atomic(path, records_to_csv(records));
}

namespace {

json record_to_json(const RunRecord& r) {
  json j;
  j["platform"] = r.platform;
  j["config"] = r.config;
  j["P"] = r.ranks;
  j["ranks_per_node"] = r.ranks_per_node;
  j["n"] = r.gridpoints;
  j["E"] = r.elements ? json(*r.elements) : nullptr;
  j["N"] = r.poly_order ? json(*r.poly_order) : nullptr;
  j["t_step"] = r.t_step;
  j["steps_timed"] = r.steps_timed;
  j["v_iters"] = r.v_iters ? json(*r.v_iters) : nullptr;
  j["p_iters"] = r.p_iters ? json(*r.p_iters) : nullptr;
  j["flops_per_rank"] =
      r.flops_per_rank ? json(*r.flops_per_rank) : nullptr;
  return j;
}

RunRecord record_from_json(const json& j, int row) {
  auto context = [row](const std::string& what) {
    return ValidationError("row " + std::to_string(row) + ": " + what);
  };
  try {
    RunRecord r;
    r.platform = j.at("platform").get<std::string>();
    if (j.contains("config") && !j["config"].is_null()) {
      r.config = j["config"].get<std::vector<std::string>>();
    }
    r.ranks = j.at("P").get<std::int64_t>();
    r.ranks_per_node = j.at("ranks_per_node").get<std::int64_t>();
    r.gridpoints = j.at("n").get<std::int64_t>();
    auto opt_num = [&](const char* key, auto& dst) {
      if (j.contains(key) && !j[key].is_null()) {
        dst = j[key].get<typename std::decay_t<decltype(dst)>::value_type>();
      }
    };
    opt_num("E", r.elements);
    opt_num("N", r.poly_order);
    r.t_step = j.at("t_step").get<double>();
    r.steps_timed = j.at("steps_timed").get<std::int64_t>();
    opt_num("v_iters", r.v_iters);
    opt_num("p_iters", r.p_iters);
    opt_num("flops_per_rank", r.flops_per_rank);
    normalize_config(r);
    validate(r);
    return r;
  } catch (const json::exception& e) {
    throw context(e.what());
  } catch (const ValidationError& e) {
    throw context(e.what());
  }
}

}  // namespace

std::vector<RunRecord> records_from_json(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_array()) {
    throw ValidationError("expected a JSON array of run records");
  }
  std::vector<RunRecord> records;
  records.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    records.push_back(record_from_json(j[i], int(i) + 1));
  }
  return records;
}

std::vector<RunRecord> read_records_json(const std::string& path) {
  return records_from_json(read_file(path));
}

RunStore group_records(std::vector<RunRecord> records) {
  std::map<std::string, std::vector<RunRecord>> groups;
  for (auto& r : records) {
    normalize_config(r);
    std::string key = r.platform;
    key += '\x1f';
    for (const auto& tag : r.config) {
      key += tag;
      key += ';';
    }
    key += '\x1f';
    key += std::to_string(r.gridpoints);
    groups[key].push_back(std::move(r));
  }
  RunStore store;
  for (auto& [key, group] : groups) {
    const RunRecord& first = group.front();
    std::string id = first.platform;
    for (const auto& tag : first.config) id += "+" + tag;
    id += "/n=" + std::to_string(first.gridpoints);
    store.series.push_back(make_series(std::move(id), std::move(group)));
  }
  return store;
}

void save_store(const std::string& path, const RunStore& store) {
  json j;
  j["version"] = 1;
  j["series"] = json::array();
  for (const auto& s : store.series) {
    json sj;
    sj["problem_id"] = s.problem_id;
    sj["platform"] = s.records.empty() ? "" : s.anchor().platform;
    sj["config"] =
        s.records.empty() ? std::vector<std::string>{} : s.anchor().config;
    sj["n"] = s.gridpoints;
    sj["records"] = json::array();
    for (const auto& r : s.records) sj["records"].push_back(record_to_json(r));
    j["series"].push_back(std::move(sj));
  }
  write_file_atomic(path, j.dump(2) + "\n");
}

RunStore load_store(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("bad store file " + path + ": " + e.what());
  }
  RunStore store;
  if (!j.is_object() || !j.contains("series")) {
    throw ValidationError("bad store file " + path + ": missing series");
  }
  for (const auto& sj : j["series"]) {
    std::vector<RunRecord> records;
    int row = 0;
    for (const auto& rj : sj.at("records")) {
      records.push_back(record_from_json(rj, ++row));
    }
    store.series.push_back(make_series(
        sj.at("problem_id").get<std::string>(), std::move(records)));
  }
  return store;
}

SeriesSelector parse_selector(const std::string& text) {
  SeriesSelector sel;
  if (text.empty()) return sel;
  for (const auto& clause : split(text, ',')) {
    if (auto eq = clause.find("platform="); eq == 0) {
      sel.platform = clause.substr(9);
    } else if (clause.find("config~") == 0) {
      sel.config_contains.push_back(clause.substr(7));
    } else if (clause.find("n=") == 0) {
      const std::string value = clause.substr(2);
      std::int64_t n = 0;
      const auto res =
          std::from_chars(value.data(), value.data() + value.size(), n);
      if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw ValidationError("bad n in selector: '" + clause + "'");
      }
      sel.gridpoints = n;
    } else {
      throw ValidationError("bad selector clause '" + clause +
                            "' (use platform=, config~, n=)");
    }
  }
  return sel;
}

std::vector<const ScalingSeries*> select(const RunStore& store,
                                         const SeriesSelector& sel) {
  std::vector<const ScalingSeries*> out;
  for (const auto& s : store.series) {
    if (s.records.empty()) continue;
    if (sel.platform && s.anchor().platform != *sel.platform) continue;
    if (sel.gridpoints && s.gridpoints != *sel.gridpoints) continue;
    bool tags_ok = true;
    for (const auto& needle : sel.config_contains) {
      bool found = false;
      for (const auto& tag : s.anchor().config) {
        if (tag.find(needle) != std::string::npos) {
          found = true;
          break;
        }
      }
      if (!found) {
        tags_ok = false;
        break;
      }
    }
    if (tags_ok) out.push_back(&s);
  }
  return out;
}

const ScalingSeries& select_one(const RunStore& store,
                                const SeriesSelector& sel) {
  const auto matches = select(store, sel);
  if (matches.empty()) {
    throw ValidationError("no series matches the selector");
  }
  if (matches.size() > 1) {
    std::string msg = "selector is ambiguous; matches:";
    for (const auto* s : matches) msg += "\n  " + s->problem_id;
    throw ValidationError(msg);
  }
  return *matches.front();
}

}  // namespace sscale
