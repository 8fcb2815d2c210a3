#pragma once

namespace expcurve::ekerosene {

inline constexpr double kLitersPerGallon = 3.78541;

/// Power-to-liquid jet fuel from electrolytic hydrogen and captured CO2.
/// Intensities are per kg of fuel.
struct EkAssumptions {
  double h2_intensity_kg_per_kg = 0.473;
  double co2_intensity_kg_per_kg = 3.432;
  double synthesis_levelized_usd_per_kg = 0.55;
  double synthesis_electricity_kwh_per_kg = 0.8;
  double electricity_price_usd_per_kwh = 0.05;
  double fuel_density_kg_per_l = 0.80;
  double subsidy_usd_per_gal = 0.0;

  void validate() const;

  /// Fuel mass per gallon, kg/gal.
  double kg_per_gallon() const noexcept { return fuel_density_kg_per_l * kLitersPerGallon; }
};

/// Levelized cost of e-kerosene in USD/gal given hydrogen at `h2_cost`
/// (USD/kg) and CO2 at `co2_cost` (USD/tCO2). The subsidy is taken off after
/// unit conversion.
double lcoek(const EkAssumptions& ek, double h2_cost_usd_per_kg, double co2_cost_usd_per_t);

struct FlightAssumptions {
  double distance_km = 5570.0;
  double fuel_burn_l_per_pkm = 0.032;
  double blend = 0.05;  // e-kerosene share by volume
  double fossil_price_usd_per_gal = 2.0;

  void validate() const;

  double gallons_per_passenger() const noexcept {
    return distance_km * fuel_burn_l_per_pkm / kLitersPerGallon;
  }
};

/// Extra fuel cost per passenger from blending e-kerosene priced at
/// `lcoek_usd_per_gal`. Negative when e-kerosene undercuts fossil fuel.
double flight_premium(const FlightAssumptions& flight, double lcoek_usd_per_gal);

}  // namespace expcurve::ekerosene
