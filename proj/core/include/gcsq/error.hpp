#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcsq {

/// Stable error categories. The CLI prints the code name as a prefix on
/// the diagnostic stream, so renaming an enumerator is a breaking change.
enum class ErrorCode {
  kInvalidArgument,
  kShapeMismatch,
  kNonFinite,
  kOutOfRange,
  kInfeasible,
  kParse,
  kIo,
  kSolver,
  kUsage,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcsq
