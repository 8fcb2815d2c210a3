#include "expcurve/error.hpp"

namespace expcurve {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveCapacity: return "NonPositiveCapacity";
    case ErrorCode::CapacityRegression: return "CapacityRegression";
    case ErrorCode::UnreachableTarget: return "UnreachableTarget";
    case ErrorCode::ZeroLearning: return "ZeroLearning";
    case ErrorCode::NegativeGrowth: return "NegativeGrowth";
    case ErrorCode::ZeroUtilization: return "ZeroUtilization";
    case ErrorCode::NonPositiveRemoval: return "NonPositiveRemoval";
    case ErrorCode::InvalidRange: return "InvalidRange";
  }
  return "Unknown";
}

}  // namespace expcurve
