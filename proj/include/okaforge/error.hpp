#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace okaforge {

enum class ErrorCode {
  InvalidParameter,
  ShapeError,
  WrongBranch,
  SearchExhausted,
  InvalidSecondComponent,
  DegenerateInput,
  InternalInconsistency,
  AmbiguousRoot,
  AmbiguousFiber,
  AmbiguousBoundary,
  PrecisionExhausted,
  ShiftTooLarge,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code so the
/// CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace okaforge
