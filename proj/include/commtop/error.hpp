#pragma once

#include <stdexcept>
#include <string>

namespace commtop {

// Failure categories. The CLI maps these onto distinct exit codes.
enum class ErrorKind {
  invalid_argument,  // malformed input or violated precondition
  parse,             // spec file could not be read or validated
  budget,            // enumeration/search exceeded the configured cap
  invariant,         // a mathematical invariant failed to hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::budget, what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

}  // namespace commtop
