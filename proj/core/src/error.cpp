#include "gcsq/error.hpp"

namespace gcsq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::kShapeMismatch: return "E_SHAPE";
    case ErrorCode::kNonFinite: return "E_NON_FINITE";
    case ErrorCode::kOutOfRange: return "E_OUT_OF_RANGE";
    case ErrorCode::kInfeasible: return "E_INFEASIBLE";
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kIo: return "E_IO";
    case ErrorCode::kSolver: return "E_SOLVER";
    case ErrorCode::kUsage: return "E_USAGE";
  }
  return "E_UNKNOWN";
}

}  // namespace gcsq
