#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbon {

enum class ErrorKind {
  Parse,
  Validation,
  CycleGraph,         // the graph is a single cycle; genus computations do not apply
  InfeasibleTarget,
  CapExceeded,        // an exhaustive enumeration would exceed its configured cap
  InvariantViolation, // an identity that must hold for valid input failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ribbon
