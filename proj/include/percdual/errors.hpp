#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace percdual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (empty component, cycles that
/// do not touch, malformed corner sequence, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was asked to run on an input above its size guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A construction step produced a result that violates its own postcondition.
/// The message carries a dump of the construction state.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace percdual
