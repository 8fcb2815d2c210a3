#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "expcurve/curves.hpp"
#include "expcurve/range.hpp"

namespace expcurve::electrolysis {

enum class StackTechnology { WesternPem, ChinesePem, WesternAlkaline, ChineseAlkaline };
enum class Region { Usa, Eu, China, Row };

inline constexpr std::size_t kTechCount = 4;
inline constexpr std::size_t kRegionCount = 4;

inline constexpr std::array<StackTechnology, kTechCount> kAllTechnologies = {
    StackTechnology::WesternPem, StackTechnology::ChinesePem,
    StackTechnology::WesternAlkaline, StackTechnology::ChineseAlkaline};
inline constexpr std::array<Region, kRegionCount> kAllRegions = {
    Region::Usa, Region::Eu, Region::China, Region::Row};

constexpr std::size_t index(StackTechnology t) noexcept { return static_cast<std::size_t>(t); }
constexpr std::size_t index(Region r) noexcept { return static_cast<std::size_t>(r); }

/// snake_case keys used in scenario files and exports ("western_pem", "usa").
std::string_view key(StackTechnology t) noexcept;
std::string_view key(Region r) noexcept;
std::optional<StackTechnology> parse_technology(std::string_view s) noexcept;
std::optional<Region> parse_region(std::string_view s) noexcept;

bool is_pem(StackTechnology t) noexcept;

template <class T>
using PerTech = std::array<T, kTechCount>;
template <class T>
using PerRegion = std::array<T, kRegionCount>;

/// Global stack curves coupled through market shares, plus local BoP&EPC
/// curves per (region, tech). All costs USD/kW, capacities kW.
struct ElectrolyzerCostModel {
  PerTech<curves::LearningCurve> stack_curves;
  PerRegion<PerTech<curves::LearningCurve>> bop_epc_curves;
  PerTech<double> market_shares;
  PerRegion<double> regional_deployment;
  double global_deployment;

  /// Throws ModelError(InvalidArgument) if shares do not sum to one or the
  /// regional horizon capacities do not add up to the global one.
  void validate() const;
};

struct CostBreakdown {
  double stack = 0.0;
  double bop_epc = 0.0;
  double total = 0.0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

double stack_capacity_at_horizon(const ElectrolyzerCostModel& model, StackTechnology tech);

CostBreakdown project_capital_cost(const ElectrolyzerCostModel& model, Region region,
                                   StackTechnology tech);

/// Breakdown at the curves' starting points (today's costs).
CostBreakdown current_capital_cost(const ElectrolyzerCostModel& model, Region region,
                                   StackTechnology tech);

/// 1 - projected/current total cost.
double decline_fraction(const ElectrolyzerCostModel& model, Region region,
                        StackTechnology tech);

// ---------------------------------------------------------------------------
// Calibration inputs and the model family used for sensitivity envelopes.

struct StackCalibration {
  double current_cost_usd_per_kw = 0.0;
  double current_capacity_kw = 0.0;
};

struct RegionCalibration {
  double current_capacity_kw = 0.0;
  double horizon_capacity_kw = 0.0;
  double bop_epc_learning_rate = 0.0;
  PerTech<double> bop_epc_cost_usd_per_kw{};
};

/// Two-level market split; per-tech shares are derived from it.
struct MarketSplit {
  double pem_fraction = 0.5;
  double pem_western_fraction = 0.5;
  double alkaline_western_fraction = 0.5;

  PerTech<double> shares() const noexcept;
};

struct ElectrolyzerConfig {
  PerTech<StackCalibration> stacks{};
  double stack_learning_rate = 0.0;
  PerRegion<RegionCalibration> regions{};
  MarketSplit split{};
};

/// One point in the sensitivity box. growth_scale multiplies the capacity
/// added between today and the horizon in every region (1 = as configured).
struct ParameterPoint {
  double stack_learning_rate = 0.0;
  PerRegion<double> bop_epc_learning_rate{};
  double growth_scale = 1.0;
};

struct ElectrolysisSensitivity {
  Bounds stack_learning_rate{};
  PerRegion<Bounds> bop_epc_learning_rate{};
  Bounds growth_scale{1.0, 1.0};
};

ParameterPoint base_point(const ElectrolyzerConfig& config);

ElectrolyzerCostModel build_model(const ElectrolyzerConfig& config, const ParameterPoint& point);
ElectrolyzerCostModel build_model(const ElectrolyzerConfig& config);

/// Corner of the sensitivity box that maximizes (`high_cost` = true) or
/// minimizes projected cost: low learning and low growth raise cost.
ParameterPoint corner(const ElectrolysisSensitivity& sens, bool high_cost);

/// Throws ModelError(InvalidRange) if any bound is inverted or excludes the
/// configured base value.
void validate_sensitivity(const ElectrolyzerConfig& config, const ElectrolysisSensitivity& sens);

/// (lo, mid, hi) of projected total cost. Cost is monotone in every box
/// coordinate, so the extremes sit at the two opposite corners.
ProjectionRange envelope(const ElectrolyzerConfig& config, const ElectrolysisSensitivity& sens,
                         Region region, StackTechnology tech);

}  // namespace expcurve::electrolysis
