#pragma once

#include <stdexcept>
#include <string>

namespace mveff {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  Asymmetric,
  NotPositiveDefinite,
  SampleTooSmall,
  DegenerateFrontier,
  QuadratureFailure,
  ParseError,
  InternalConsistency,
};

/// Single exception type for the library. The code distinguishes input
/// validation problems from numerical failures (the CLI maps them to
/// exit codes 1 and 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_numeric() const noexcept {
    return code_ == ErrorCode::NotPositiveDefinite ||
           code_ == ErrorCode::DegenerateFrontier ||
           code_ == ErrorCode::QuadratureFailure ||
           code_ == ErrorCode::InternalConsistency;
  }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

}  // namespace mveff
