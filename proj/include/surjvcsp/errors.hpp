#pragma once

#include <stdexcept>
#include <string>

namespace surjvcsp {

/// Precondition on an argument was violated.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called in a state where it is undefined
/// (e.g. optimal enumeration on an instance with lambda = 0).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A hard size guard was exceeded (brute force limits, bitmask widths,
/// rational overflow).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cut enumeration on a disconnected graph outside the brute-force range.
class ExponentialOutputError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

/// Input data is well-formed but semantically invalid
/// (e.g. a set-function table that is not superadditive).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Carries a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace surjvcsp
