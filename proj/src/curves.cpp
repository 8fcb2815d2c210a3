#include "expcurve/curves.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "expcurve/error.hpp"

namespace expcurve::curves {

LearningCurve::LearningCurve(double initial_cost, double initial_capacity,
                             double learning_rate)
    : initial_cost_(initial_cost),
      initial_capacity_(initial_capacity),
      learning_rate_(learning_rate),
      exponent_(0.0) {
  if (!(initial_cost > 0.0) || !std::isfinite(initial_cost)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("initial cost must be positive, got {}", initial_cost));
  }
  if (!(initial_capacity > 0.0) || !std::isfinite(initial_capacity)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("initial capacity must be positive, got {}", initial_capacity));
  }
  if (!(learning_rate >= 0.0 && learning_rate < 1.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("learning rate must be in [0, 1), got {}", learning_rate));
  }
  exponent_ = std::log2(1.0 - learning_rate);
}

LearningCurve LearningCurve::with_learning_rate(double learning_rate) const {
  return {initial_cost_, initial_capacity_, learning_rate};
}

LearningCurve LearningCurve::with_initial_cost(double initial_cost) const {
  return {initial_cost, initial_capacity_, learning_rate_};
}

namespace {

void check_forward(const LearningCurve& curve, double capacity) {
  if (!(capacity > 0.0)) {
    throw ModelError(ErrorCode::NonPositiveCapacity,
                     fmt::format("capacity must be positive, got {}", capacity));
  }
  if (capacity < curve.initial_capacity()) {
    throw ModelError(ErrorCode::CapacityRegression,
                     fmt::format("capacity {} is below the curve's starting capacity {}",
                                 capacity, curve.initial_capacity()));
  }
}

}  // namespace

double project_cost(const LearningCurve& curve, double target_capacity) {
  check_forward(curve, target_capacity);
  if (curve.exponent() == 0.0) return curve.initial_cost();
  return curve.initial_cost() *
         std::pow(target_capacity / curve.initial_capacity(), curve.exponent());
}

double capacity_for_cost(const LearningCurve& curve, double target_cost) {
  if (!(target_cost > 0.0) || target_cost > curve.initial_cost()) {
    throw ModelError(ErrorCode::UnreachableTarget,
                     fmt::format("target cost {} is outside (0, {}]", target_cost,
                                 curve.initial_cost()));
  }
  if (target_cost == curve.initial_cost()) return curve.initial_capacity();
  if (curve.learning_rate() == 0.0) {
    throw ModelError(ErrorCode::ZeroLearning,
                     "a curve without learning never reaches a lower cost");
  }
  return curve.initial_capacity() *
         std::pow(target_cost / curve.initial_cost(), 1.0 / curve.exponent());
}

double cumulative_investment(const LearningCurve& curve, double from_capacity,
                             double to_capacity) {
  check_forward(curve, from_capacity);
  if (to_capacity < from_capacity) {
    throw ModelError(ErrorCode::CapacityRegression,
                     fmt::format("investment interval is reversed: {} -> {}",
                                 from_capacity, to_capacity));
  }
  if (to_capacity == from_capacity) return 0.0;

  // c0*x0 * integral_{s}^{r} u^b du with s, r the capacity ratios, written as
  // s^(b+1) * expm1((b+1) ln(r/s)) / (b+1); this is exact at b = -1 and keeps
  // full precision as b approaches it.
  const double x0 = curve.initial_capacity();
  const double e = curve.exponent() + 1.0;
  const double log_span = std::log(to_capacity / from_capacity);
  const double scale = curve.initial_cost() * x0;
  if (e == 0.0) return scale * log_span;
  const double s_pow = std::pow(from_capacity / x0, e);
  return scale * s_pow * std::expm1(e * log_span) / e;
}

double doublings(const LearningCurve& curve, double target_capacity) {
  check_forward(curve, target_capacity);
  return std::log2(target_capacity / curve.initial_capacity());
}

}  // namespace expcurve::curves
