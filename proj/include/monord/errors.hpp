#ifndef MONORD_ERRORS_HPP
#define MONORD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monord {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An operation was called outside of its domain (zero ideal where a proper
/// one is required, invalid Hilbert-Samuel polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; line is 0 for
/// single-line inputs such as ordinal expressions.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "parse error at column " + std::to_string(column) + ": " + what;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A configured resource cap (subset cap, search window, node cap) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The step budget of a recursive bound computation ran out.
class BudgetExceeded : public ResourceError {
 public:
  explicit BudgetExceeded(std::size_t depth)
      : ResourceError("budget exceeded at depth " + std::to_string(depth)), depth_(depth) {}

  std::size_t depth() const { return depth_; }

 private:
  std::size_t depth_;
};

}  // namespace monord

#endif  // MONORD_ERRORS_HPP
