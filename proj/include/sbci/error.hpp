#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbci {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table or carrier violates the FiniteAlgebra invariants.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

/// An operation was requested that the algebra does not carry.
class AbsentOperation : public Error {
 public:
  using Error::Error;
};

/// A relation that must be a partial order is not one.
class NotPartialOrder : public Error {
 public:
  using Error::Error;
};

/// A construction gate failed. `gate()` names the failing precondition.
class PreconditionViolation : public Error {
 public:
  PreconditionViolation(std::string gate, const std::string& detail)
      : Error(gate + ": " + detail), gate_(std::move(gate)) {}

  const std::string& gate() const noexcept { return gate_; }

 private:
  std::string gate_;
};

/// Exhaustive quantification refused because the carrier is too large.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An arithmetic operation is undefined for its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sbci
