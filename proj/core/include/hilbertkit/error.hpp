#pragma once

#include <stdexcept>
#include <string>

namespace hilbertkit {

enum class ErrorCode {
  NotPrime,
  NotIrreducible,
  OrderTooLarge,
  DivisionByZero,
  FieldMismatch,
  OutOfRange,
  ElementOutsideGrid,
  OrderNotDegreeCompatible,
  PreconditionViolated,
  EmptySet,
  SetTooSmall,
  MinEntropyBelowK,
  ParseError,
  // Resource caps: the input is well-formed but exceeds what a desk-scale
  // exhaustive computation is allowed to touch.
  SpaceTooLarge,
  GridTooLarge,
  InputSpaceTooLarge,
  OutputSpaceTooLarge,
};

const char* to_string(ErrorCode code) noexcept;
bool is_resource_cap(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilbertkit
