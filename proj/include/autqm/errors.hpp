#pragma once

#include <stdexcept>
#include <string>

namespace autqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates an operation's preconditions (bad letters, bad
/// parameters, mismatched ranks, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  RankMismatch(int lhs, int rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// A search or closure exceeded an explicit resource cutoff. Partial results
/// are discarded; callers must never treat them as complete.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. Carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace autqm
