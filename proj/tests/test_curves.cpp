#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "expcurve/curves.hpp"
#include "expcurve/error.hpp"
#include "oracles.hpp"

namespace {

using namespace expcurve;
using curves::LearningCurve;
using oracle::rel_err;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ModelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ModelError";
  return ErrorCode::InvalidArgument;
}

TEST(Curves, ProjectCostExamples) {
  const LearningCurve c(100, 1, 0.20);
  EXPECT_NEAR(curves::project_cost(c, 2), 80.0, 1e-12);
  EXPECT_NEAR(curves::project_cost(c, 4), 64.0, 1e-12);
  EXPECT_EQ(curves::project_cost(LearningCurve(2600, 0.5e6, 0.15), 0.5e6), 2600.0);
}

TEST(Curves, ConstructorRejectsInvalid) {
  EXPECT_EQ(code_of([] { LearningCurve(0, 1, 0.1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { LearningCurve(1, 0, 0.1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { LearningCurve(1, 1, 1.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { LearningCurve(1, 1, -0.1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { LearningCurve(std::nan(""), 1, 0.1); }), ErrorCode::InvalidArgument);
}

TEST(Curves, ProjectCostErrors) {
  const LearningCurve c(100, 1, 0.20);
  EXPECT_EQ(code_of([&] { curves::project_cost(c, 0); }), ErrorCode::NonPositiveCapacity);
  EXPECT_EQ(code_of([&] { curves::project_cost(c, 0.5); }), ErrorCode::CapacityRegression);
}

TEST(Curves, CapacityForCostExamples) {
  const LearningCurve c(100, 1, 0.20);
  EXPECT_NEAR(curves::capacity_for_cost(c, 64), 4.0, 1e-12);
  EXPECT_EQ(curves::capacity_for_cost(c, 100), 1.0);
  EXPECT_EQ(code_of([&] { curves::capacity_for_cost(c, 101); }), ErrorCode::UnreachableTarget);
  EXPECT_EQ(code_of([&] { curves::capacity_for_cost(c, 0); }), ErrorCode::UnreachableTarget);
  EXPECT_EQ(code_of([] { curves::capacity_for_cost(LearningCurve(100, 1, 0), 50); }),
            ErrorCode::ZeroLearning);
}

TEST(Curves, CapacityForCostMatchesBisectionOracle) {
  const LearningCurve c(2600, 0.5e6, 0.15);
  const double x = curves::capacity_for_cost(c, 1600);
  const double oracle = oracle::bisect(
      [&](double cap) { return curves::project_cost(c, cap) - 1600; }, 0.5e6, 1e9);
  EXPECT_LT(rel_err(x, oracle), 1e-9);
  EXPECT_NEAR(curves::project_cost(c, x), 1600.0, 1e-6);
}

TEST(Curves, InvestmentExamples) {
  const LearningCurve c(2600, 0.5e6, 0.15);
  EXPECT_EQ(curves::cumulative_investment(c, 1e6, 1e6), 0.0);
  EXPECT_NEAR(curves::cumulative_investment(LearningCurve(100, 1, 0), 1, 3), 200.0, 1e-12);
  EXPECT_EQ(code_of([&] { curves::cumulative_investment(c, 2e6, 1e6); }),
            ErrorCode::CapacityRegression);
}

TEST(Curves, InvestmentMatchesTrapezoidOracle) {
  const LearningCurve c(2600, 0.5e6, 0.15);
  const double closed = curves::cumulative_investment(c, 0.5e6, 3.5e6);
  const double numeric =
      oracle::trapezoid([&](double x) { return curves::project_cost(c, x); }, 0.5e6, 3.5e6);
  EXPECT_LT(rel_err(closed, numeric), 1e-6);
}

TEST(Curves, InvestmentAtUnitExponentUsesLogForm) {
  const LearningCurve c(100, 1, 0.5);  // b = -1
  ASSERT_DOUBLE_EQ(c.exponent(), -1.0);
  EXPECT_NEAR(curves::cumulative_investment(c, 1, 8), 100 * std::log(8.0), 1e-9);
  const double numeric =
      oracle::trapezoid([&](double x) { return curves::project_cost(c, x); }, 1, 8);
  EXPECT_LT(rel_err(curves::cumulative_investment(c, 1, 8), numeric), 1e-6);
}

TEST(Curves, Doublings) {
  EXPECT_DOUBLE_EQ(curves::doublings(LearningCurve(1, 1, 0.1), 8), 3.0);
  EXPECT_DOUBLE_EQ(curves::doublings(LearningCurve(1, 1, 0.1), 1), 0.0);
  EXPECT_NEAR(curves::doublings(LearningCurve(1, 0.5e6, 0.1), 3.5e6), std::log2(7.0), 1e-12);
}

class CurveProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240601};
  LearningCurve random_curve() {
    std::uniform_real_distribution<double> cost(1, 1e4), cap(1e2, 1e7), rate(0.01, 0.4);
    return LearningCurve(cost(rng), cap(rng), rate(rng));
  }
  double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
};

TEST_F(CurveProperties, CostNonIncreasingInCapacity) {
  for (int i = 0; i < 500; ++i) {
    const auto c = random_curve();
    const double x1 = c.initial_capacity() * u(1, 100);
    const double x2 = x1 * u(1, 10);
    EXPECT_LE(curves::project_cost(c, x2), curves::project_cost(c, x1));
  }
}

TEST_F(CurveProperties, CostNonIncreasingInLearningRate) {
  for (int i = 0; i < 500; ++i) {
    const auto c = random_curve();
    const double x = c.initial_capacity() * u(1, 100);
    const auto steeper = c.with_learning_rate(std::min(0.95, c.learning_rate() + u(0, 0.3)));
    EXPECT_LE(curves::project_cost(steeper, x), curves::project_cost(c, x));
  }
}

TEST_F(CurveProperties, InversionRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_curve();
    const double x = c.initial_capacity() * u(1, 1e4);
    const double cost = curves::project_cost(c, x);
    EXPECT_LT(rel_err(curves::capacity_for_cost(c, cost), x), 1e-9);
    const double target = c.initial_cost() * u(0.05, 1);
    EXPECT_LT(rel_err(curves::project_cost(c, curves::capacity_for_cost(c, target)), target),
              1e-9);
  }
}

TEST_F(CurveProperties, InvestmentAdditive) {
  for (int i = 0; i < 500; ++i) {
    const auto c = random_curve();
    const double a = c.initial_capacity() * u(1, 10);
    const double b = a * u(1, 10);
    const double d = b * u(1, 10);
    const double whole = curves::cumulative_investment(c, a, d);
    const double parts =
        curves::cumulative_investment(c, a, b) + curves::cumulative_investment(c, b, d);
    EXPECT_LT(rel_err(parts, whole), 1e-9);
  }
}

TEST_F(CurveProperties, InvestmentScalesWithInitialCost) {
  for (int i = 0; i < 200; ++i) {
    const auto c = random_curve();
    const double k = u(0.1, 10);
    const double a = c.initial_capacity(), b = a * u(1, 50);
    EXPECT_LT(rel_err(curves::cumulative_investment(c.with_initial_cost(c.initial_cost() * k), a, b),
                      k * curves::cumulative_investment(c, a, b)),
              1e-12);
  }
}

TEST_F(CurveProperties, CostDependsOnlyOnCapacityRatio) {
  for (int i = 0; i < 200; ++i) {
    const auto c = random_curve();
    const double k = u(0.01, 100), ratio = u(1, 1e3);
    const LearningCurve scaled(c.initial_cost(), c.initial_capacity() * k, c.learning_rate());
    EXPECT_LT(rel_err(curves::project_cost(scaled, scaled.initial_capacity() * ratio),
                      curves::project_cost(c, c.initial_capacity() * ratio)),
              1e-12);
  }
}

}  // namespace
