#include "mveff/error.hpp"

namespace mveff {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Asymmetric: return "Asymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::DegenerateFrontier: return "DegenerateFrontier";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace mveff
