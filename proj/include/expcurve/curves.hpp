#pragma once

namespace expcurve::curves {

/// Wright's-law experience curve: unit cost falls by `learning_rate` for every
/// doubling of cumulative installed capacity.
///
///   cost(x) = initial_cost * (x / initial_capacity)^b,  b = log2(1 - learning_rate)
///
/// Costs are per unit of capacity (USD/kW, USD per tCO2/yr); capacity is
/// cumulative nameplate. Construction enforces the invariants, so every
/// LearningCurve value in the program is valid.
class LearningCurve {
 public:
  /// Throws ModelError(InvalidArgument) unless initial_cost > 0,
  /// initial_capacity > 0 and 0 <= learning_rate < 1.
  LearningCurve(double initial_cost, double initial_capacity, double learning_rate);

  double initial_cost() const noexcept { return initial_cost_; }
  double initial_capacity() const noexcept { return initial_capacity_; }
  double learning_rate() const noexcept { return learning_rate_; }

  /// log(1 - learning_rate) / log(2); zero iff the learning rate is zero.
  double exponent() const noexcept { return exponent_; }

  LearningCurve with_learning_rate(double learning_rate) const;
  LearningCurve with_initial_cost(double initial_cost) const;

  friend bool operator==(const LearningCurve&, const LearningCurve&) = default;

 private:
  double initial_cost_;
  double initial_capacity_;
  double learning_rate_;
  double exponent_;
};

/// Unit cost once cumulative capacity reaches `target_capacity`.
/// Errors: NonPositiveCapacity (target <= 0), CapacityRegression (target below
/// the curve's starting capacity; the model only runs forward).
double project_cost(const LearningCurve& curve, double target_capacity);

/// Cumulative capacity at which the unit cost reaches `target_cost`.
/// Errors: UnreachableTarget when target_cost is not in (0, initial_cost];
/// ZeroLearning when the curve is flat and the target is below initial cost.
double capacity_for_cost(const LearningCurve& curve, double target_cost);

/// Capital outlay to build from `from_capacity` to `to_capacity` along the
/// curve, i.e. the integral of the unit cost over capacity. Uses the
/// logarithmic closed form at b = -1.
double cumulative_investment(const LearningCurve& curve, double from_capacity,
                             double to_capacity);

/// Number of capacity doublings from the curve's start to `target_capacity`.
double doublings(const LearningCurve& curve, double target_capacity);

}  // namespace expcurve::curves
