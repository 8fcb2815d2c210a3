#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expcurve {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveCapacity,
  CapacityRegression,
  UnreachableTarget,
  ZeroLearning,
  NegativeGrowth,
  ZeroUtilization,
  NonPositiveRemoval,
  InvalidRange,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Failure raised by the model operations. The code is stable and is what
/// callers (CLI exit codes, HTTP status mapping) dispatch on.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace expcurve
