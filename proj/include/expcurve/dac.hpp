#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "expcurve/curves.hpp"
#include "expcurve/finance.hpp"
#include "expcurve/range.hpp"

namespace expcurve::dac {

enum class GwpHorizon { Gwp20, Gwp100 };

std::string_view key(GwpHorizon h) noexcept;
std::optional<GwpHorizon> parse_horizon(std::string_view s) noexcept;

/// Methane warming potential relative to CO2 for each horizon.
struct GwpValues {
  double gwp20 = 82.5;
  double gwp100 = 29.8;

  double value(GwpHorizon h) const noexcept { return h == GwpHorizon::Gwp20 ? gwp20 : gwp100; }
};

/// Liquid-solvent DAC plant economics. The capital curve is in USD per
/// tCO2/yr of capture capacity; capacities are cumulative tCO2/yr.
struct DacCostModel {
  curves::LearningCurve capital_curve;
  FinancialAssumptions financial{};
  double capacity_factor = 0.9;
  double non_learning_opex_usd_per_t = 0.0;
  double gas_intensity_gj_per_t = 9.5;
  double methane_mass_per_energy_t_per_gj = 0.019;

  void validate() const;

  /// Yearly capital charge per tonne captured, per USD of capital per t/yr.
  double annualization() const;
};

struct LeakageSpec {
  double leak_rate = 0.0;  // fraction of produced gas
  double gwp = 29.8;
  GwpHorizon horizon = GwpHorizon::Gwp100;

  void validate() const;
};

LeakageSpec make_leakage(double leak_rate, GwpHorizon horizon, const GwpValues& gwp = {});

/// Capture cost in USD/tCO2 once cumulative capacity reaches `capacity_tpy`.
double capture_cost(const DacCostModel& model, double capacity_tpy);

/// Captured CO2 net of upstream methane leakage, as a fraction of gross
/// capture. Zero or negative means the leak cancels the removal.
double net_removal_fraction(const DacCostModel& model, const LeakageSpec& leakage);

/// capture_cost / net_removal_fraction. Throws NonPositiveRemoval when the
/// fraction is <= 0.
double net_removal_cost(const DacCostModel& model, double capacity_tpy,
                        const LeakageSpec& leakage);

struct TargetResult {
  double required_capacity_tpy = 0.0;
  double learning_investment_usd = 0.0;
};

/// Capacity build-out and gross capital outlay needed to bring the net
/// removal cost down to `target_net_cost`. A target at or above today's net
/// cost needs nothing. Throws UnreachableTarget when even free capital cannot
/// reach the target.
TargetResult target_analysis(const DacCostModel& model, const LeakageSpec& leakage,
                             double target_net_cost);

enum class SweepStatus { Ok, Unreachable, NoNetRemoval };

std::string_view key(SweepStatus s) noexcept;

struct SweepCell {
  SweepStatus status = SweepStatus::Ok;
  double capacity_tpy = 0.0;
  double investment_usd = 0.0;
};

struct SweepRow {
  double target_usd_per_t = 0.0;
  SweepCell low_leakage;
  SweepCell high_leakage;
};

/// Never throws for a single target; failures become row statuses.
SweepCell evaluate_target(const DacCostModel& model, const LeakageSpec& leakage,
                          double target_net_cost);

/// Throws InvalidArgument unless targets are strictly decreasing and positive.
void validate_target_grid(std::span<const double> targets);

/// Serial reference sweep over a decreasing target grid at two leakage rates.
/// The parallel variant lives in kernels.hpp.
std::vector<SweepRow> target_sweep(const DacCostModel& model, const LeakageSpec& leakage_lo,
                                   const LeakageSpec& leakage_hi,
                                   std::span<const double> targets);

/// Result of fitting the gas intensity to the two leakage anchors: a target
/// net cost at one leak rate (equality) and full cancellation at another
/// (inequality), clamped into an allowed window.
struct GasIntensityFit {
  double gas_intensity_gj_per_t = 0.0;
  double net_cost_at_anchor = 0.0;
  double anchor_relative_residual = 0.0;
  double fraction_at_cancellation = 0.0;
};

struct GasIntensityAnchors {
  double capture_cost_usd_per_t = 483.0;
  double net_cost_usd_per_t = 610.0;
  double net_cost_leak_rate = 0.037;
  GwpHorizon net_cost_horizon = GwpHorizon::Gwp100;
  double cancellation_leak_rate = 0.07;
  GwpHorizon cancellation_horizon = GwpHorizon::Gwp20;
  Bounds window{8.5, 9.5};
};

GasIntensityFit fit_gas_intensity(double methane_mass_per_energy, const GwpValues& gwp,
                                  const GasIntensityAnchors& anchors = {});

}  // namespace expcurve::dac
