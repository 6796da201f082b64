#pragma once

#include <stdexcept>
#include <string>

namespace zflow {

// Input that violates a documented precondition.
struct invalid_argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed graph text; carries the 1-based line number.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

// Instance exceeds a configured exhaustive-search limit.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zflow
