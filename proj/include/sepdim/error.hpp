#pragma once

#include <stdexcept>
#include <string>

namespace sepdim {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, family, or poset document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact search ran out of its node-expansion budget or hit a size guard.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced output that failed its own post-check.
/// Seeing one of these means a bug, not bad input.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sepdim
