#include "hilbertkit/error.hpp"

namespace hilbertkit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ElementOutsideGrid: return "ElementOutsideGrid";
    case ErrorCode::OrderNotDegreeCompatible: return "OrderNotDegreeCompatible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::SetTooSmall: return "SetTooSmall";
    case ErrorCode::MinEntropyBelowK: return "MinEntropyBelowK";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::InputSpaceTooLarge: return "InputSpaceTooLarge";
    case ErrorCode::OutputSpaceTooLarge: return "OutputSpaceTooLarge";
  }
  return "Unknown";
}

bool is_resource_cap(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SpaceTooLarge:
    case ErrorCode::GridTooLarge:
    case ErrorCode::InputSpaceTooLarge:
    case ErrorCode::OutputSpaceTooLarge:
    case ErrorCode::OrderTooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hilbertkit
