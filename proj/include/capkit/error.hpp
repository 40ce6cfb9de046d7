#pragma once

#include <stdexcept>
#include <string>

namespace capkit {

enum class ErrorCode {
  WrongLength,
  NotNormalized,
  NotMonotone,
  DegenerateDraw,
  GenerationFailed,
  DimensionMismatch,
  NegativeInput,
  WindowTooSmall,
  NotSubmodular,
  BadLambda,
  BudgetExceeded,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Contract violation raised by the toolkit's operations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(capkit::to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the 1-based line number of the offending input line
/// (0 when the problem is not tied to one line, e.g. a missing mask).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError, line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace capkit
