#include "dimers/error.hpp"

namespace dimers {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MonotoneSupportViolation: return "MonotoneSupportViolation";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OddGirth: return "OddGirth";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonIntegerEntries: return "NonIntegerEntries";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorCode::NoColumnStructure: return "NoColumnStructure";
    case ErrorCode::ColumnTooWide: return "ColumnTooWide";
    case ErrorCode::NonMonomialWeight: return "NonMonomialWeight";
    case ErrorCode::PlanLengthMismatch: return "PlanLengthMismatch";
    case ErrorCode::NotTwoColorable: return "NotTwoColorable";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dimers
