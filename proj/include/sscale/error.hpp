#pragma once

#include <stdexcept>
#include <string>

namespace sscale {

// Base class for all toolkit failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid data or violated invariant (CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input text; message carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

// Filesystem failure (CLI exit code 3).
struct IoError : Error {
  using Error::Error;
};

}  // namespace sscale
