#include "expcurve/ekerosene.hpp"

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "expcurve/error.hpp"

namespace expcurve::ekerosene {

namespace {

template <class... Args>
void require(bool ok, fmt::format_string<Args...> msg, Args&&... args) {
  if (!ok) throw ModelError(ErrorCode::InvalidArgument, fmt::format(msg, std::forward<Args>(args)...));
}

}  // namespace

void EkAssumptions::validate() const {
  require(h2_intensity_kg_per_kg >= 0.0,
          "hydrogen intensity must be >= 0, got {}", h2_intensity_kg_per_kg);
  require(co2_intensity_kg_per_kg >= 0.0,
          "CO2 intensity must be >= 0, got {}", co2_intensity_kg_per_kg);
  require(synthesis_levelized_usd_per_kg >= 0.0, "synthesis levelized cost must be >= 0");
  require(synthesis_electricity_kwh_per_kg >= 0.0, "synthesis electricity must be >= 0");
  require(std::isfinite(electricity_price_usd_per_kwh), "electricity price must be finite");
  require(fuel_density_kg_per_l > 0.7 && fuel_density_kg_per_l <= 0.85,
          "fuel density must be in (0.7, 0.85] kg/l, got {}", fuel_density_kg_per_l);
  require(subsidy_usd_per_gal >= 0.0,
          "subsidy must be >= 0, got {}", subsidy_usd_per_gal);
}

double lcoek(const EkAssumptions& ek, double h2_cost_usd_per_kg, double co2_cost_usd_per_t) {
  ek.validate();
  require(std::isfinite(h2_cost_usd_per_kg) && std::isfinite(co2_cost_usd_per_t),
          "input costs must be finite");
  const double per_kg = ek.h2_intensity_kg_per_kg * h2_cost_usd_per_kg +
                        ek.co2_intensity_kg_per_kg * (co2_cost_usd_per_t / 1000.0) +
                        ek.synthesis_levelized_usd_per_kg +
                        ek.synthesis_electricity_kwh_per_kg * ek.electricity_price_usd_per_kwh;
  return per_kg * ek.kg_per_gallon() - ek.subsidy_usd_per_gal;
}

void FlightAssumptions::validate() const {
  require(distance_km > 0.0, "distance must be > 0, got {}", distance_km);
  require(fuel_burn_l_per_pkm > 0.0,
          "fuel burn must be > 0, got {}", fuel_burn_l_per_pkm);
  require(blend >= 0.0 && blend <= 1.0, "blend must be in [0, 1], got {}", blend);
  require(fossil_price_usd_per_gal > 0.0,
          "fossil price must be > 0, got {}", fossil_price_usd_per_gal);
}

double flight_premium(const FlightAssumptions& flight, double lcoek_usd_per_gal) {
  flight.validate();
  return flight.blend * (lcoek_usd_per_gal - flight.fossil_price_usd_per_gal) *
         flight.gallons_per_passenger();
}

}  // namespace expcurve::ekerosene
