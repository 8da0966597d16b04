#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcol {

// Semantically invalid arguments: ids out of range, malformed colorings,
// bad parameter combinations.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A text source could not be parsed. Carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The source is well formed but uses a feature this library does not handle
// (complex matrices, array format, ...).
class unsupported_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested size does not fit the index types in use.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A benchmarked run produced an improper or incomplete coloring.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read, or written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcol
