#pragma once

#include <cstdint>
#include <string>

namespace sscale {

// Whole-file read; throws IoError.
std::string read_file(const std::string& path);

// Write via temp file + rename so readers never see partial output.
void write_file_atomic(const std::string& path, const std::string& content);

// Shortest representation that round-trips the value exactly.
std::string format_double(double v);
std::string format_int(std::int64_t v);

}  // namespace sscale
