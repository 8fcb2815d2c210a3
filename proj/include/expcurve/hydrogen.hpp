#pragma once

#include "expcurve/finance.hpp"

namespace expcurve::hydrogen {

inline constexpr double kHoursPerYear = 8760.0;

/// Inputs for levelizing one electrolysis plant.
struct HydrogenPlantAssumptions {
  double capex_usd_per_kw = 0.0;
  double specific_energy_kwh_per_kg = 55.0;
  double utilization = 1.0;            // capacity factor, (0, 1]
  double electricity_price_usd_per_kwh = 0.0;
  double subsidy_usd_per_kg = 0.0;
  FinancialAssumptions financial{};

  /// ZeroUtilization for utilization == 0, InvalidArgument for the rest.
  void validate() const;
};

/// Annualized capital plus fixed O&M per kg produced, USD/kg.
double capital_contribution(const HydrogenPlantAssumptions& a);

/// capital + electricity - subsidy, USD/kg. Can be negative under a large
/// enough subsidy; callers flag that rather than clamp it.
double lcoh(const HydrogenPlantAssumptions& a);

/// Electricity price (USD/kWh) at which lcoh hits `target_lcoh`. The
/// electricity price on `a` is ignored. A negative result means the target
/// cannot be met at any non-negative power price.
double required_electricity_price(const HydrogenPlantAssumptions& a, double target_lcoh);

}  // namespace expcurve::hydrogen
