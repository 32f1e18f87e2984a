#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Caller supplied something outside an operation's domain (unknown vertex,
/// v == w for the order, empty set where a nonempty one is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem-level hypothesis does not hold for the graph at hand. The
/// message names the violated clause.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A conjugation rewrite was requested for a pair outside the implemented
/// case tables. Raised instead of producing an unverified word.
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure: a post-hoc check on a computed object did
/// not hold. Always a bug.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph document. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace raag
