#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goodsets {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed or outside an operation's domain.
struct InputError : Error {
  using Error::Error;
};

struct EmptyInput : InputError {
  EmptyInput() : InputError("empty point set") {}
};

struct ShapeError : InputError {
  using InputError::InputError;
};

struct UnsupportedInput : InputError {
  using InputError::InputError;
};

struct OutOfRange : InputError {
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  // line/column are 1-based; 0 means the location is unknown
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "parse error: " + what;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

class SingularError : public Error {
 public:
  explicit SingularError(std::size_t rank)
      : Error("matrix is singular (rank " + std::to_string(rank) + ")"), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

// A decision procedure's precondition evaluated to "no"; the CLI maps these to exit code 1.
struct PredicateFailure : Error {
  using Error::Error;
};

struct NotGoodError : PredicateFailure {
  NotGoodError() : PredicateFailure("point set is not good") {}
};

struct NotABoundary : PredicateFailure {
  NotABoundary() : PredicateFailure("column set is not a boundary of the point set") {}
};

struct NotRelatedError : PredicateFailure {
  NotRelatedError() : PredicateFailure("points are not related: no full subset contains both") {}
};

struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace goodsets
