#include "expcurve/dac.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "expcurve/error.hpp"

namespace expcurve::dac {

std::string_view key(GwpHorizon h) noexcept {
  return h == GwpHorizon::Gwp20 ? "gwp20" : "gwp100";
}

std::optional<GwpHorizon> parse_horizon(std::string_view s) noexcept {
  if (s == "gwp20" || s == "20") return GwpHorizon::Gwp20;
  if (s == "gwp100" || s == "100") return GwpHorizon::Gwp100;
  return std::nullopt;
}

std::string_view key(SweepStatus s) noexcept {
  switch (s) {
    case SweepStatus::Ok: return "ok";
    case SweepStatus::Unreachable: return "unreachable";
    case SweepStatus::NoNetRemoval: return "no_net_removal";
  }
  return "";
}

void DacCostModel::validate() const {
  financial.validate();
  if (!(capacity_factor > 0.0 && capacity_factor <= 1.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("capacity factor must be in (0, 1], got {}", capacity_factor));
  }
  if (!(non_learning_opex_usd_per_t >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("non-learning opex must be >= 0, got {}",
                                 non_learning_opex_usd_per_t));
  }
  if (!(gas_intensity_gj_per_t >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("gas intensity must be >= 0, got {}", gas_intensity_gj_per_t));
  }
  if (!(methane_mass_per_energy_t_per_gj >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("methane mass per energy must be >= 0, got {}",
                                 methane_mass_per_energy_t_per_gj));
  }
}

double DacCostModel::annualization() const {
  validate();
  return financial.annual_charge_rate() / capacity_factor;
}

void LeakageSpec::validate() const {
  if (!(leak_rate >= 0.0 && leak_rate < 1.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("leak rate must be in [0, 1), got {}", leak_rate));
  }
  if (!(gwp > 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument, fmt::format("GWP must be > 0, got {}", gwp));
  }
}

LeakageSpec make_leakage(double leak_rate, GwpHorizon horizon, const GwpValues& gwp) {
  LeakageSpec spec{leak_rate, gwp.value(horizon), horizon};
  spec.validate();
  return spec;
}

double capture_cost(const DacCostModel& model, double capacity_tpy) {
  const double capital = curves::project_cost(model.capital_curve, capacity_tpy);
  return capital * model.annualization() + model.non_learning_opex_usd_per_t;
}

double net_removal_fraction(const DacCostModel& model, const LeakageSpec& leakage) {
  model.validate();
  leakage.validate();
  // Leak rates are normalized to produced gas, so delivered gas G implies
  // G * L / (1 - L) leaked.
  const double leaked_ch4_per_t = model.gas_intensity_gj_per_t *
                                  model.methane_mass_per_energy_t_per_gj * leakage.leak_rate /
                                  (1.0 - leakage.leak_rate);
  return 1.0 - leaked_ch4_per_t * leakage.gwp;
}

double net_removal_cost(const DacCostModel& model, double capacity_tpy,
                        const LeakageSpec& leakage) {
  const double fraction = net_removal_fraction(model, leakage);
  if (!(fraction > 0.0)) {
    throw ModelError(ErrorCode::NonPositiveRemoval,
                     fmt::format("leak rate {} at GWP {} cancels all captured CO2 (net fraction {})",
                                 leakage.leak_rate, leakage.gwp, fraction));
  }
  return capture_cost(model, capacity_tpy) / fraction;
}

TargetResult target_analysis(const DacCostModel& model, const LeakageSpec& leakage,
                             double target_net_cost) {
  if (!(target_net_cost > 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("target net cost must be > 0, got {}", target_net_cost));
  }
  const auto& curve = model.capital_curve;
  const double current = net_removal_cost(model, curve.initial_capacity(), leakage);
  if (target_net_cost >= current) return {curve.initial_capacity(), 0.0};

  const double fraction = net_removal_fraction(model, leakage);
  const double required_capture = target_net_cost * fraction;
  if (required_capture <= model.non_learning_opex_usd_per_t) {
    throw ModelError(ErrorCode::UnreachableTarget,
                     fmt::format("target {} USD/t needs capture at {} USD/t, at or below the "
                                 "non-learning opex of {} USD/t",
                                 target_net_cost, required_capture,
                                 model.non_learning_opex_usd_per_t));
  }
  const double required_capital =
      (required_capture - model.non_learning_opex_usd_per_t) / model.annualization();
  const double capacity = curves::capacity_for_cost(curve, required_capital);
  if (!std::isfinite(capacity)) {
    throw ModelError(ErrorCode::UnreachableTarget,
                     fmt::format("target {} USD/t needs unbounded capacity", target_net_cost));
  }
  return {capacity, curves::cumulative_investment(curve, curve.initial_capacity(), capacity)};
}

SweepCell evaluate_target(const DacCostModel& model, const LeakageSpec& leakage,
                          double target_net_cost) {
  try {
    const auto r = target_analysis(model, leakage, target_net_cost);
    return {SweepStatus::Ok, r.required_capacity_tpy, r.learning_investment_usd};
  } catch (const ModelError& e) {
    switch (e.code()) {
      case ErrorCode::NonPositiveRemoval: return {SweepStatus::NoNetRemoval, 0.0, 0.0};
      case ErrorCode::UnreachableTarget:
      case ErrorCode::ZeroLearning: return {SweepStatus::Unreachable, 0.0, 0.0};
      default: throw;
    }
  }
}

void validate_target_grid(std::span<const double> targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!(targets[i] > 0.0)) {
      throw ModelError(ErrorCode::InvalidArgument,
                       fmt::format("target #{} must be > 0, got {}", i, targets[i]));
    }
    if (i > 0 && !(targets[i] < targets[i - 1])) {
      throw ModelError(ErrorCode::InvalidArgument,
                       fmt::format("target grid must be strictly decreasing at #{}", i));
    }
  }
}

std::vector<SweepRow> target_sweep(const DacCostModel& model, const LeakageSpec& leakage_lo,
                                   const LeakageSpec& leakage_hi,
                                   std::span<const double> targets) {
  validate_target_grid(targets);
  std::vector<SweepRow> rows;
  rows.reserve(targets.size());
  for (double t : targets) {
    rows.push_back({t, evaluate_target(model, leakage_lo, t),
                    evaluate_target(model, leakage_hi, t)});
  }
  return rows;
}

GasIntensityFit fit_gas_intensity(double methane_mass_per_energy, const GwpValues& gwp,
                                  const GasIntensityAnchors& anchors) {
  if (!(methane_mass_per_energy > 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument, "methane mass per energy must be > 0");
  }
  auto leaked_per_gj = [&](double leak, GwpHorizon h) {
    return methane_mass_per_energy * leak / (1.0 - leak) * gwp.value(h);
  };
  const double anchor_fraction = anchors.capture_cost_usd_per_t / anchors.net_cost_usd_per_t;
  const double g_anchor = (1.0 - anchor_fraction) /
                          leaked_per_gj(anchors.net_cost_leak_rate, anchors.net_cost_horizon);
  const double g_cancel =
      1.0 / leaked_per_gj(anchors.cancellation_leak_rate, anchors.cancellation_horizon);
  const double g = std::clamp(std::max(g_anchor, g_cancel), anchors.window.lo, anchors.window.hi);

  GasIntensityFit fit;
  fit.gas_intensity_gj_per_t = g;
  const double frac_anchor =
      1.0 - g * leaked_per_gj(anchors.net_cost_leak_rate, anchors.net_cost_horizon);
  fit.net_cost_at_anchor = anchors.capture_cost_usd_per_t / frac_anchor;
  fit.anchor_relative_residual = fit.net_cost_at_anchor / anchors.net_cost_usd_per_t - 1.0;
  fit.fraction_at_cancellation =
      1.0 - g * leaked_per_gj(anchors.cancellation_leak_rate, anchors.cancellation_horizon);
  return fit;
}

}  // namespace expcurve::dac
