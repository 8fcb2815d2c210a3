#include "expcurve/hydrogen.hpp"

#include <cmath>

#include <fmt/format.h>

#include "expcurve/error.hpp"

namespace expcurve::hydrogen {

void HydrogenPlantAssumptions::validate() const {
  if (!(capex_usd_per_kw >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("capex must be >= 0, got {}", capex_usd_per_kw));
  }
  if (!(specific_energy_kwh_per_kg > 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("specific energy must be > 0, got {}",
                                 specific_energy_kwh_per_kg));
  }
  if (utilization == 0.0) {
    throw ModelError(ErrorCode::ZeroUtilization, "utilization is zero; no hydrogen is produced");
  }
  if (!(utilization > 0.0 && utilization <= 1.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("utilization must be in (0, 1], got {}", utilization));
  }
  if (!(subsidy_usd_per_kg >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("subsidy must be >= 0, got {}", subsidy_usd_per_kg));
  }
  if (!std::isfinite(electricity_price_usd_per_kwh)) {
    throw ModelError(ErrorCode::InvalidArgument, "electricity price must be finite");
  }
  financial.validate();
}

double capital_contribution(const HydrogenPlantAssumptions& a) {
  a.validate();
  return a.capex_usd_per_kw * a.financial.annual_charge_rate() * a.specific_energy_kwh_per_kg /
         (kHoursPerYear * a.utilization);
}

double lcoh(const HydrogenPlantAssumptions& a) {
  return capital_contribution(a) + a.electricity_price_usd_per_kwh * a.specific_energy_kwh_per_kg -
         a.subsidy_usd_per_kg;
}

double required_electricity_price(const HydrogenPlantAssumptions& a, double target_lcoh) {
  if (!(target_lcoh >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("target LCOH must be >= 0, got {}", target_lcoh));
  }
  auto plant = a;
  plant.electricity_price_usd_per_kwh = 0.0;
  return (target_lcoh + plant.subsidy_usd_per_kg - capital_contribution(plant)) /
         plant.specific_energy_kwh_per_kg;
}

}  // namespace expcurve::hydrogen
