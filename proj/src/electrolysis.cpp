#include "expcurve/electrolysis.hpp"

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "expcurve/error.hpp"

namespace expcurve::electrolysis {

namespace {

template <std::size_t N, class F, std::size_t... I>
auto make_array_impl(F&& f, std::index_sequence<I...>) {
  return std::array{f(I)...};
}

template <std::size_t N, class F>
auto make_array(F&& f) {
  return make_array_impl<N>(std::forward<F>(f), std::make_index_sequence<N>{});
}

constexpr double kShareTolerance = 1e-9;
constexpr double kDeploymentTolerance = 1e-6;

}  // namespace

std::string_view key(StackTechnology t) noexcept {
  switch (t) {
    case StackTechnology::WesternPem: return "western_pem";
    case StackTechnology::ChinesePem: return "chinese_pem";
    case StackTechnology::WesternAlkaline: return "western_alkaline";
    case StackTechnology::ChineseAlkaline: return "chinese_alkaline";
  }
  return "";
}

std::string_view key(Region r) noexcept {
  switch (r) {
    case Region::Usa: return "usa";
    case Region::Eu: return "eu";
    case Region::China: return "china";
    case Region::Row: return "row";
  }
  return "";
}

std::optional<StackTechnology> parse_technology(std::string_view s) noexcept {
  for (auto t : kAllTechnologies)
    if (key(t) == s) return t;
  return std::nullopt;
}

std::optional<Region> parse_region(std::string_view s) noexcept {
  for (auto r : kAllRegions)
    if (key(r) == s) return r;
  return std::nullopt;
}

bool is_pem(StackTechnology t) noexcept {
  return t == StackTechnology::WesternPem || t == StackTechnology::ChinesePem;
}

void ElectrolyzerCostModel::validate() const {
  double share_sum = 0.0;
  for (double s : market_shares) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ModelError(ErrorCode::InvalidArgument,
                       fmt::format("market share {} is outside [0, 1]", s));
    }
    share_sum += s;
  }
  if (std::abs(share_sum - 1.0) > kShareTolerance) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("market shares sum to {}, expected 1", share_sum));
  }
  double regional_sum = 0.0;
  for (double d : regional_deployment) regional_sum += d;
  if (std::abs(regional_sum - global_deployment) >
      kDeploymentTolerance * std::max(1.0, std::abs(global_deployment))) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("regional deployment sums to {} but global is {}",
                                 regional_sum, global_deployment));
  }
}

double stack_capacity_at_horizon(const ElectrolyzerCostModel& model, StackTechnology tech) {
  double installed = 0.0;
  for (const auto& c : model.stack_curves) installed += c.initial_capacity();
  double growth = model.global_deployment - installed;
  if (growth < 0.0) {
    // Sums taken in different orders may disagree in the last bits.
    if (-growth <= 1e-9 * installed) {
      growth = 0.0;
    } else {
      throw ModelError(ErrorCode::NegativeGrowth,
                       fmt::format("horizon deployment {} kW is below today's {} kW",
                                   model.global_deployment, installed));
    }
  }
  const auto& curve = model.stack_curves[index(tech)];
  return curve.initial_capacity() + model.market_shares[index(tech)] * growth;
}

CostBreakdown project_capital_cost(const ElectrolyzerCostModel& model, Region region,
                                   StackTechnology tech) {
  CostBreakdown out;
  out.stack = curves::project_cost(model.stack_curves[index(tech)],
                                   stack_capacity_at_horizon(model, tech));
  out.bop_epc = curves::project_cost(model.bop_epc_curves[index(region)][index(tech)],
                                     model.regional_deployment[index(region)]);
  out.total = out.stack + out.bop_epc;
  return out;
}

CostBreakdown current_capital_cost(const ElectrolyzerCostModel& model, Region region,
                                   StackTechnology tech) {
  CostBreakdown out;
  out.stack = model.stack_curves[index(tech)].initial_cost();
  out.bop_epc = model.bop_epc_curves[index(region)][index(tech)].initial_cost();
  out.total = out.stack + out.bop_epc;
  return out;
}

double decline_fraction(const ElectrolyzerCostModel& model, Region region,
                        StackTechnology tech) {
  const double now = current_capital_cost(model, region, tech).total;
  const double then = project_capital_cost(model, region, tech).total;
  return 1.0 - then / now;
}

PerTech<double> MarketSplit::shares() const noexcept {
  PerTech<double> s{};
  s[index(StackTechnology::WesternPem)] = pem_fraction * pem_western_fraction;
  s[index(StackTechnology::ChinesePem)] = pem_fraction * (1.0 - pem_western_fraction);
  s[index(StackTechnology::WesternAlkaline)] = (1.0 - pem_fraction) * alkaline_western_fraction;
  s[index(StackTechnology::ChineseAlkaline)] =
      (1.0 - pem_fraction) * (1.0 - alkaline_western_fraction);
  return s;
}

ParameterPoint base_point(const ElectrolyzerConfig& config) {
  ParameterPoint p;
  p.stack_learning_rate = config.stack_learning_rate;
  for (auto r : kAllRegions)
    p.bop_epc_learning_rate[index(r)] = config.regions[index(r)].bop_epc_learning_rate;
  p.growth_scale = 1.0;
  return p;
}

ElectrolyzerCostModel build_model(const ElectrolyzerConfig& config, const ParameterPoint& point) {
  if (!(point.growth_scale >= 0.0)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("growth scale must be non-negative, got {}", point.growth_scale));
  }
  auto stack_curves = make_array<kTechCount>([&](std::size_t t) {
    const auto& s = config.stacks[t];
    return curves::LearningCurve(s.current_cost_usd_per_kw, s.current_capacity_kw,
                                 point.stack_learning_rate);
  });
  auto bop_curves = make_array<kRegionCount>([&](std::size_t r) {
    const auto& reg = config.regions[r];
    return make_array<kTechCount>([&](std::size_t t) {
      return curves::LearningCurve(reg.bop_epc_cost_usd_per_kw[t], reg.current_capacity_kw,
                                   point.bop_epc_learning_rate[r]);
    });
  });
  PerRegion<double> regional{};
  double global = 0.0;
  for (std::size_t r = 0; r < kRegionCount; ++r) {
    const auto& reg = config.regions[r];
    regional[r] = reg.current_capacity_kw +
                  point.growth_scale * (reg.horizon_capacity_kw - reg.current_capacity_kw);
    global += regional[r];
  }
  ElectrolyzerCostModel model{std::move(stack_curves), std::move(bop_curves),
                              config.split.shares(), regional, global};
  model.validate();
  return model;
}

ElectrolyzerCostModel build_model(const ElectrolyzerConfig& config) {
  return build_model(config, base_point(config));
}

ParameterPoint corner(const ElectrolysisSensitivity& sens, bool high_cost) {
  ParameterPoint p;
  p.stack_learning_rate = high_cost ? sens.stack_learning_rate.lo : sens.stack_learning_rate.hi;
  for (std::size_t r = 0; r < kRegionCount; ++r) {
    const auto& b = sens.bop_epc_learning_rate[r];
    p.bop_epc_learning_rate[r] = high_cost ? b.lo : b.hi;
  }
  p.growth_scale = high_cost ? sens.growth_scale.lo : sens.growth_scale.hi;
  return p;
}

void validate_sensitivity(const ElectrolyzerConfig& config, const ElectrolysisSensitivity& sens) {
  auto check = [](const Bounds& b, double base, std::string_view what) {
    if (!b.ordered() || !b.contains(base)) {
      throw ModelError(ErrorCode::InvalidRange,
                       fmt::format("{} bounds [{}, {}] must satisfy lo <= {} <= hi", what, b.lo,
                                   b.hi, base));
    }
  };
  check(sens.stack_learning_rate, config.stack_learning_rate, "stack learning rate");
  for (auto r : kAllRegions) {
    check(sens.bop_epc_learning_rate[index(r)],
          config.regions[index(r)].bop_epc_learning_rate,
          fmt::format("{} BoP&EPC learning rate", key(r)));
  }
  check(sens.growth_scale, 1.0, "growth scale");
}

ProjectionRange envelope(const ElectrolyzerConfig& config, const ElectrolysisSensitivity& sens,
                         Region region, StackTechnology tech) {
  validate_sensitivity(config, sens);
  ProjectionRange out;
  out.lo = project_capital_cost(build_model(config, corner(sens, false)), region, tech).total;
  out.mid = project_capital_cost(build_model(config), region, tech).total;
  out.hi = project_capital_cost(build_model(config, corner(sens, true)), region, tech).total;
  return out;
}

}  // namespace expcurve::electrolysis
