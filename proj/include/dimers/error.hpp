#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dimers {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  MonotoneSupportViolation,
  DuplicateEdge,
  SizeMismatch,
  OddGirth,
  GirthTooSmall,
  BadParity,
  NotSquare,
  TooLarge,
  NonIntegerEntries,
  Unbalanced,
  ZeroToNegativePower,
  NoColumnStructure,
  ColumnTooWide,
  NonMonomialWeight,
  PlanLengthMismatch,
  NotTwoColorable,
  NegativeRadicand,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dimers
