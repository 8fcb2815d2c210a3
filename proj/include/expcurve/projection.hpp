#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expcurve/dac.hpp"
#include "expcurve/electrolysis.hpp"
#include "expcurve/kernels.hpp"
#include "expcurve/range.hpp"
#include "expcurve/scenario.hpp"

namespace expcurve::projection {

enum class Section { Electrolysis, Hydrogen, Dac, Ekerosene };

inline constexpr std::array<Section, 4> kAllSections = {Section::Electrolysis, Section::Hydrogen,
                                                        Section::Dac, Section::Ekerosene};

std::string_view key(Section s) noexcept;
std::optional<Section> parse_section(std::string_view s) noexcept;

using electrolysis::PerRegion;
using electrolysis::PerTech;
using electrolysis::Region;
using electrolysis::StackTechnology;

struct ElectrolysisRow {
  Region region = Region::Usa;
  StackTechnology technology = StackTechnology::WesternPem;
  electrolysis::CostBreakdown current;
  electrolysis::CostBreakdown projected;
  ProjectionRange projected_total_range;
  double decline_fraction = 0.0;
};

struct ElectrolysisResult {
  PerTech<double> stack_capacity_current_kw{};
  PerTech<double> stack_capacity_horizon_kw{};
  PerRegion<double> regional_capacity_horizon_kw{};
  double global_capacity_horizon_kw = 0.0;
  std::vector<ElectrolysisRow> rows;  // region-major, technology-minor
  double min_decline_fraction = 0.0;
  double max_decline_fraction = 0.0;
};

/// Capital plus fixed O&M per kg at full utilization, before electricity.
struct CapitalContributionRow {
  Region region = Region::Usa;
  StackTechnology technology = StackTechnology::WesternPem;
  double current_usd_per_kg = 0.0;
  ProjectionRange projected_usd_per_kg;
};

struct HydrogenRegionResult {
  Region region = Region::Usa;
  StackTechnology technology = StackTechnology::WesternPem;
  double capex_current_usd_per_kw = 0.0;
  ProjectionRange capex_projected_usd_per_kw;
  kernels::Grid lcoh_current;                 // utilization x USD/kWh, no subsidy
  kernels::Grid lcoh_projected;               // same, projected capex
  kernels::Grid lcoh_projected_subsidized;    // projected capex with subsidy
  kernels::Grid required_price_projected;     // utilization x target, no subsidy
  kernels::Grid required_price_projected_subsidized;
  double min_lcoh_projected_subsidized = 0.0;
  std::size_t negative_lcoh_cells = 0;
};

struct HydrogenResult {
  double subsidy_usd_per_kg = 0.0;
  Bounds fossil_reference_usd_per_kg;
  std::vector<CapitalContributionRow> capital_contribution;
  std::vector<HydrogenRegionResult> regions;
  /// True if any subsidized cell is below zero; values are reported as is.
  bool negative_lcoh = false;
};

struct DacLearningCase {
  std::string label;  // "low", "base" or "high" learning
  double learning_rate = 0.0;
  double capital_horizon_usd_per_tpy = 0.0;
  double capture_horizon_usd_per_t = 0.0;
  double net_horizon_low_leak_usd_per_t = 0.0;
  double net_horizon_high_leak_usd_per_t = 0.0;
};

struct DacSweep {
  double learning_rate = 0.0;
  std::vector<dac::SweepRow> rows;
};

struct DacResult {
  double capacity_current_tpy = 0.0;
  double capacity_horizon_tpy = 0.0;
  double capital_current_usd_per_tpy = 0.0;
  double capture_current_usd_per_t = 0.0;
  double net_fraction_low_leak = 0.0;
  double net_fraction_high_leak = 0.0;
  double net_current_low_leak_usd_per_t = 0.0;
  double net_current_high_leak_usd_per_t = 0.0;
  std::vector<DacLearningCase> cases;  // low, base, high
  ProjectionRange capital_horizon_usd_per_tpy;
  ProjectionRange capture_horizon_usd_per_t;
  ProjectionRange net_horizon_usd_per_t;
  std::vector<DacSweep> sweeps;  // base learning rate first
};

struct EkeroseneRegionRow {
  Region region = Region::Usa;
  StackTechnology technology = StackTechnology::WesternPem;
  double h2_current_usd_per_kg = 0.0;
  double h2_projected_usd_per_kg = 0.0;
  double co2_current_usd_per_t = 0.0;
  double co2_projected_usd_per_t = 0.0;
  double lcoek_current_usd_per_gal = 0.0;
  double lcoek_projected_usd_per_gal = 0.0;
  double lcoek_projected_subsidized_usd_per_gal = 0.0;
  double reduction_usd_per_gal = 0.0;
};

struct EkeroseneResult {
  ekerosene::EkAssumptions assumptions;
  std::vector<EkeroseneRegionRow> regions;
  kernels::Grid surface;  // H2 USD/kg x CO2 USD/t, no subsidy
  Bounds lcoek_current_usd_per_gal;
  Bounds lcoek_projected_usd_per_gal;
  Bounds reduction_usd_per_gal;
  Bounds flight_premium_current_usd;
  Bounds flight_premium_projected_usd;
};

/// Everything one scenario run produces. A section that fails leaves its slot
/// empty and records the message under its key in `errors`.
struct ResultBundle {
  std::string engine_version;
  std::string scenario_name;
  nlohmann::json effective_config;
  std::optional<ElectrolysisResult> electrolysis;
  std::optional<HydrogenResult> hydrogen;
  std::optional<DacResult> dac;
  std::optional<EkeroseneResult> ekerosene;
  std::map<std::string, std::string> errors;
};

ElectrolysisResult run_electrolysis(const scenario::Scenario& s);
HydrogenResult run_hydrogen(const scenario::Scenario& s,
                            kernels::Execution exec = kernels::Execution::Parallel);
DacResult run_dac(const scenario::Scenario& s,
                  kernels::Execution exec = kernels::Execution::Parallel);
EkeroseneResult run_ekerosene(const scenario::Scenario& s,
                              kernels::Execution exec = kernels::Execution::Parallel);

/// Runs the requested sections (all when `sections` is empty). Deterministic:
/// identical inputs give identical bundles.
ResultBundle run_full_projection(const scenario::Scenario& s,
                                 std::span<const Section> sections = {},
                                 kernels::Execution exec = kernels::Execution::Parallel);

/// Flight premium extremes over fuel burn x fossil price x e-kerosene cost.
Bounds flight_premium_range(const scenario::FlightSettings& flight, Bounds lcoek_usd_per_gal);

}  // namespace expcurve::projection
