#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sscale/run_record.hpp"

namespace sscale {

// Validated run records grouped into scaling series keyed by
// (platform, config, n), in deterministic (sorted-key) order.
struct RunStore {
  std::vector<ScalingSeries> series;

  std::size_t record_count() const;
};

// CSV schema, one record per row. Header is mandatory:
//   platform,config,P,ranks_per_node,n,E,N,t_step,steps_timed,
//   v_iters,p_iters,flops_per_rank
// config is a semicolon-joined tag list; blank cells are absent optionals.
extern const char* const kRunCsvHeader;

std::vector<RunRecord> records_from_csv(std::string_view text);
std::string records_to_csv(std::span<const RunRecord> records);
std::vector<RunRecord> read_records_csv(const std::string& path);
void write_records_csv(const std::string& path,
                       std::span<const RunRecord> records);

// JSON alternative: an array of row objects using the CSV column names.
std::vector<RunRecord> records_from_json(std::string_view text);
std::vector<RunRecord> read_records_json(const std::string& path);

RunStore group_records(std::vector<RunRecord> records);

void save_store(const std::string& path, const RunStore& store);
RunStore load_store(const std::string& path);

// Series selector: comma-separated clauses, all of which must match.
//   platform=<exact>   config~<substring of any tag>   n=<exact>
struct SeriesSelector {
  std::optional<std::string> platform;
  std::vector<std::string> config_contains;
  std::optional<std::int64_t> gridpoints;
};

SeriesSelector parse_selector(const std::string& text);
std::vector<const ScalingSeries*> select(const RunStore& store,
                                         const SeriesSelector& sel);

// Exactly-one-match variant; throws ValidationError listing candidates
// when the selector is ambiguous or matches nothing.
const ScalingSeries& select_one(const RunStore& store,
                                const SeriesSelector& sel);

}  // namespace sscale
