#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "expcurve/error.hpp"
#include "expcurve/hydrogen.hpp"

namespace {

using namespace expcurve;
using hydrogen::HydrogenPlantAssumptions;

HydrogenPlantAssumptions plant(double capex, double u, double price, double subsidy = 0) {
  HydrogenPlantAssumptions a;
  a.capex_usd_per_kw = capex;
  a.utilization = u;
  a.electricity_price_usd_per_kwh = price;
  a.subsidy_usd_per_kg = subsidy;
  return a;
}

TEST(Finance, CapitalRecoveryFactor) {
  const FinancialAssumptions f{0.08, 20, 0.02};
  const double g = std::pow(1.08, 20);
  EXPECT_NEAR(f.capital_recovery_factor(), 0.08 * g / (g - 1), 1e-15);
  EXPECT_NEAR(f.annual_charge_rate(), 0.08 * g / (g - 1) + 0.02, 1e-15);
  EXPECT_DOUBLE_EQ((FinancialAssumptions{0.0, 25, 0.0}).capital_recovery_factor(), 1.0 / 25);
  EXPECT_THROW((FinancialAssumptions{-0.01, 20, 0.02}).validate(), ModelError);
  EXPECT_THROW((FinancialAssumptions{0.05, 0, 0.02}).validate(), ModelError);
}

TEST(Hydrogen, CapitalContributionExamples) {
  EXPECT_EQ(hydrogen::capital_contribution(plant(0, 1, 0)), 0.0);
  auto a = plant(1000, 1, 0);
  a.financial.fixed_om_fraction = 0;
  a.financial.fixed_om_fraction = 0.1314 - a.financial.capital_recovery_factor();
  EXPECT_NEAR(hydrogen::capital_contribution(a), 0.825, 1e-12);
}

TEST(Hydrogen, EnergyOnlyLcoh) {
  EXPECT_NEAR(hydrogen::lcoh(plant(0, 1, 0.02)), 1.10, 1e-12);
}

TEST(Hydrogen, ZeroUtilizationRejected) {
  try {
    hydrogen::lcoh(plant(1000, 0, 0.02));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroUtilization);
  }
  EXPECT_THROW(hydrogen::lcoh(plant(1000, 1.2, 0.02)), ModelError);
  EXPECT_THROW(hydrogen::lcoh(plant(-1, 1, 0.02)), ModelError);
}

TEST(Hydrogen, RequiredPriceBoundary) {
  const auto a = plant(1500, 0.6, 0);
  EXPECT_NEAR(hydrogen::required_electricity_price(a, hydrogen::capital_contribution(a)), 0.0,
              1e-15);
  EXPECT_LT(hydrogen::required_electricity_price(plant(3000, 0.2, 0), 1.0), 0.0);
}

class HydrogenProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
  double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  HydrogenPlantAssumptions random_plant() {
    auto a = plant(u(0, 4000), u(0.05, 1), u(0, 0.15), u(0, 3));
    a.specific_energy_kwh_per_kg = u(45, 60);
    a.financial = {u(0, 0.15), static_cast<int>(u(5, 40)), u(0, 0.05)};
    return a;
  }
};

TEST_F(HydrogenProperties, SubsidyShiftsLcohExactly) {
  for (int i = 0; i < 500; ++i) {
    auto a = random_plant();
    a.subsidy_usd_per_kg = 0;
    const double before = hydrogen::lcoh(a);
    a.subsidy_usd_per_kg = 3.0;
    EXPECT_NEAR(before - hydrogen::lcoh(a), 3.0, 1e-12);
  }
}

TEST_F(HydrogenProperties, AffineInElectricityPrice) {
  for (int i = 0; i < 500; ++i) {
    auto a = random_plant();
    const double l0 = hydrogen::lcoh(a);
    a.electricity_price_usd_per_kwh += 0.0078125;
    const double l1 = hydrogen::lcoh(a);
    EXPECT_NEAR(l1 - l0, 0.0078125 * a.specific_energy_kwh_per_kg, 1e-12);
  }
}

TEST_F(HydrogenProperties, CapitalTimesUtilizationConstant) {
  for (int i = 0; i < 500; ++i) {
    auto a = random_plant();
    const double k = hydrogen::capital_contribution(a) * a.utilization;
    a.utilization = u(0.05, 1);
    EXPECT_NEAR(hydrogen::capital_contribution(a) * a.utilization, k, 1e-12 * std::max(1.0, k));
  }
}

TEST_F(HydrogenProperties, CapitalDecreasingInUtilization) {
  for (int i = 0; i < 500; ++i) {
    auto a = random_plant();
    a.capex_usd_per_kw = u(1, 4000);
    const double c0 = hydrogen::capital_contribution(a);
    a.utilization = std::min(1.0, a.utilization * u(1.01, 2));
    if (a.utilization < 1.0) {
      EXPECT_LT(hydrogen::capital_contribution(a), c0);
    }
  }
}

TEST_F(HydrogenProperties, RequiredPriceRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    auto a = random_plant();
    const double target = u(0, 8);
    a.electricity_price_usd_per_kwh = hydrogen::required_electricity_price(a, target);
    EXPECT_NEAR(hydrogen::lcoh(a), target, 1e-9);
  }
}

}  // namespace
