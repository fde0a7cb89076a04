#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bds {

// Malformed graph text. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Out-of-range vertex, infeasible generator parameters, bad sizes.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Caller misuse of a resource, e.g. freeing a meter token twice.
class UsageError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A compact dictionary was asked to hold more keys than it was sized for.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

// Internal state no longer agrees with itself (e.g. a reconstruction replay
// ran out of vertices before reaching its checkpoint).
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace bds
