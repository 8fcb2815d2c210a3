#include "expcurve/projection.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "expcurve/hydrogen.hpp"
#include "expcurve/version.hpp"

namespace expcurve::projection {

using electrolysis::index;
using electrolysis::kAllRegions;
using electrolysis::kAllTechnologies;
using scenario::Scenario;

std::string_view key(Section s) noexcept {
  switch (s) {
    case Section::Electrolysis: return "electrolysis";
    case Section::Hydrogen: return "hydrogen";
    case Section::Dac: return "dac";
    case Section::Ekerosene: return "ekerosene";
  }
  return "";
}

std::optional<Section> parse_section(std::string_view s) noexcept {
  for (auto sec : kAllSections)
    if (key(sec) == s) return sec;
  return std::nullopt;
}

namespace {

struct ElectrolysisModels {
  electrolysis::ElectrolyzerCostModel base;
  electrolysis::ElectrolyzerCostModel low_cost;
  electrolysis::ElectrolyzerCostModel high_cost;
};

ElectrolysisModels electrolysis_models(const Scenario& s) {
  electrolysis::validate_sensitivity(s.electrolysis, s.electrolysis_sensitivity);
  return {electrolysis::build_model(s.electrolysis),
          electrolysis::build_model(s.electrolysis,
                                    electrolysis::corner(s.electrolysis_sensitivity, false)),
          electrolysis::build_model(s.electrolysis,
                                    electrolysis::corner(s.electrolysis_sensitivity, true))};
}

ProjectionRange total_range(const ElectrolysisModels& m, Region r, StackTechnology t) {
  return {electrolysis::project_capital_cost(m.low_cost, r, t).total,
          electrolysis::project_capital_cost(m.base, r, t).total,
          electrolysis::project_capital_cost(m.high_cost, r, t).total};
}

hydrogen::HydrogenPlantAssumptions plant(const scenario::HydrogenSettings& h, double capex) {
  hydrogen::HydrogenPlantAssumptions a;
  a.capex_usd_per_kw = capex;
  a.specific_energy_kwh_per_kg = h.specific_energy_kwh_per_kg;
  a.financial = h.financial;
  return a;
}

double contribution_at_full_load(const scenario::HydrogenSettings& h, double capex) {
  return hydrogen::capital_contribution(plant(h, capex));
}

Bounds extent(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

}  // namespace

ElectrolysisResult run_electrolysis(const Scenario& s) {
  const auto models = electrolysis_models(s);
  ElectrolysisResult out;
  for (auto t : kAllTechnologies) {
    out.stack_capacity_current_kw[index(t)] =
        models.base.stack_curves[index(t)].initial_capacity();
    out.stack_capacity_horizon_kw[index(t)] =
        electrolysis::stack_capacity_at_horizon(models.base, t);
  }
  out.regional_capacity_horizon_kw = models.base.regional_deployment;
  out.global_capacity_horizon_kw = models.base.global_deployment;

  out.min_decline_fraction = std::numeric_limits<double>::infinity();
  out.max_decline_fraction = -std::numeric_limits<double>::infinity();
  for (auto r : kAllRegions) {
    for (auto t : kAllTechnologies) {
      ElectrolysisRow row;
      row.region = r;
      row.technology = t;
      row.current = electrolysis::current_capital_cost(models.base, r, t);
      row.projected = electrolysis::project_capital_cost(models.base, r, t);
      row.projected_total_range = total_range(models, r, t);
      row.decline_fraction = 1.0 - row.projected.total / row.current.total;
      out.min_decline_fraction = std::min(out.min_decline_fraction, row.decline_fraction);
      out.max_decline_fraction = std::max(out.max_decline_fraction, row.decline_fraction);
      out.rows.push_back(row);
    }
  }
  return out;
}

HydrogenResult run_hydrogen(const Scenario& s, kernels::Execution exec) {
  const auto models = electrolysis_models(s);
  const auto& h = s.hydrogen;
  HydrogenResult out;
  out.subsidy_usd_per_kg = h.subsidy_usd_per_kg;
  out.fossil_reference_usd_per_kg = h.fossil_reference_usd_per_kg;

  for (auto r : kAllRegions) {
    for (auto t : kAllTechnologies) {
      const auto range = total_range(models, r, t);
      CapitalContributionRow row;
      row.region = r;
      row.technology = t;
      row.current_usd_per_kg =
          contribution_at_full_load(h, electrolysis::current_capital_cost(models.base, r, t).total);
      row.projected_usd_per_kg = {contribution_at_full_load(h, range.lo),
                                  contribution_at_full_load(h, range.mid),
                                  contribution_at_full_load(h, range.hi)};
      out.capital_contribution.push_back(row);
    }
  }

  for (auto r : kAllRegions) {
    const auto t = h.reference_technology[index(r)];
    HydrogenRegionResult reg;
    reg.region = r;
    reg.technology = t;
    reg.capex_current_usd_per_kw = electrolysis::current_capital_cost(models.base, r, t).total;
    reg.capex_projected_usd_per_kw = total_range(models, r, t);

    auto now = plant(h, reg.capex_current_usd_per_kw);
    auto then = plant(h, reg.capex_projected_usd_per_kw.mid);
    auto then_subsidized = then;
    then_subsidized.subsidy_usd_per_kg = h.subsidy_usd_per_kg;

    reg.lcoh_current =
        kernels::lcoh_grid(now, h.utilization_grid, h.electricity_price_grid_usd_per_kwh, exec);
    reg.lcoh_projected =
        kernels::lcoh_grid(then, h.utilization_grid, h.electricity_price_grid_usd_per_kwh, exec);
    reg.lcoh_projected_subsidized = kernels::lcoh_grid(
        then_subsidized, h.utilization_grid, h.electricity_price_grid_usd_per_kwh, exec);
    reg.required_price_projected =
        kernels::required_price_grid(then, h.utilization_grid, h.target_lcoh_usd_per_kg, exec);
    reg.required_price_projected_subsidized = kernels::required_price_grid(
        then_subsidized, h.utilization_grid, h.target_lcoh_usd_per_kg, exec);

    const auto& v = reg.lcoh_projected_subsidized.values;
    reg.min_lcoh_projected_subsidized = *std::min_element(v.begin(), v.end());
    reg.negative_lcoh_cells =
        static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double x) { return x < 0.0; }));
    out.negative_lcoh = out.negative_lcoh || reg.negative_lcoh_cells > 0;
    out.regions.push_back(std::move(reg));
  }
  return out;
}

DacResult run_dac(const Scenario& s, kernels::Execution exec) {
  const auto& d = s.dac;
  const auto base = d.model();
  const auto leak_lo = d.leakage_spec(d.leakage.lo);
  const auto leak_hi = d.leakage_spec(d.leakage.hi);
  const auto leak_mid = d.leakage_spec(0.5 * (d.leakage.lo + d.leakage.hi));

  DacResult out;
  out.capacity_current_tpy = d.current_capacity_tpy;
  out.capacity_horizon_tpy = d.horizon_capacity_tpy();
  out.capital_current_usd_per_tpy = d.current_cost_usd_per_tpy;
  out.capture_current_usd_per_t = dac::capture_cost(base, d.current_capacity_tpy);
  out.net_fraction_low_leak = dac::net_removal_fraction(base, leak_lo);
  out.net_fraction_high_leak = dac::net_removal_fraction(base, leak_hi);
  out.net_current_low_leak_usd_per_t =
      dac::net_removal_cost(base, d.current_capacity_tpy, leak_lo);
  out.net_current_high_leak_usd_per_t =
      dac::net_removal_cost(base, d.current_capacity_tpy, leak_hi);

  const std::pair<const char*, double> cases[] = {{"low", d.learning_rate_range.lo},
                                                  {"base", d.learning_rate},
                                                  {"high", d.learning_rate_range.hi}};
  for (const auto& [label, rate] : cases) {
    const auto m = d.model(rate);
    const double x = out.capacity_horizon_tpy;
    out.cases.push_back({label, rate, curves::project_cost(m.capital_curve, x),
                         dac::capture_cost(m, x), dac::net_removal_cost(m, x, leak_lo),
                         dac::net_removal_cost(m, x, leak_hi)});
  }

  // Cost falls with learning and with build-out, so the cheap corner pairs
  // the high learning rate with the largest pipeline.
  const auto cheap = d.model(d.learning_rate_range.hi);
  const auto dear = d.model(d.learning_rate_range.lo);
  const double x_big = d.horizon_capacity_tpy(d.pipeline_scale.hi);
  const double x_small = d.horizon_capacity_tpy(d.pipeline_scale.lo);
  const double x_mid = out.capacity_horizon_tpy;
  out.capital_horizon_usd_per_tpy = {curves::project_cost(cheap.capital_curve, x_big),
                                     curves::project_cost(base.capital_curve, x_mid),
                                     curves::project_cost(dear.capital_curve, x_small)};
  out.capture_horizon_usd_per_t = {dac::capture_cost(cheap, x_big),
                                   dac::capture_cost(base, x_mid),
                                   dac::capture_cost(dear, x_small)};
  out.net_horizon_usd_per_t = {dac::net_removal_cost(cheap, x_big, leak_lo),
                               dac::net_removal_cost(base, x_mid, leak_mid),
                               dac::net_removal_cost(dear, x_small, leak_hi)};

  std::vector<double> rates{d.learning_rate};
  for (double r : d.sweep_learning_rates)
    if (std::find(rates.begin(), rates.end(), r) == rates.end()) rates.push_back(r);
  for (double r : rates) {
    out.sweeps.push_back(
        {r, kernels::target_sweep(d.model(r), leak_lo, leak_hi, d.sweep_targets_usd_per_t, exec)});
  }
  return out;
}

Bounds flight_premium_range(const scenario::FlightSettings& flight, Bounds lcoek_usd_per_gal) {
  Bounds out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (double burn : {flight.fuel_burn_l_per_pkm.lo, flight.fuel_burn_l_per_pkm.hi}) {
    for (double fossil : {flight.fossil_price_usd_per_gal.lo, flight.fossil_price_usd_per_gal.hi}) {
      for (double ek : {lcoek_usd_per_gal.lo, lcoek_usd_per_gal.hi}) {
        ekerosene::FlightAssumptions f{flight.distance_km, burn, flight.blend, fossil};
        const double p = ekerosene::flight_premium(f, ek);
        out.lo = std::min(out.lo, p);
        out.hi = std::max(out.hi, p);
      }
    }
  }
  return out;
}

EkeroseneResult run_ekerosene(const Scenario& s, kernels::Execution exec) {
  const auto& e = s.ekerosene;
  const auto models = electrolysis_models(s);
  const auto dac_model = s.dac.model();

  EkeroseneResult out;
  out.assumptions = e.assumptions();
  auto subsidized = out.assumptions;
  subsidized.subsidy_usd_per_gal = e.subsidy_usd_per_gal;

  const double co2_now = dac::capture_cost(dac_model, s.dac.current_capacity_tpy);
  const double co2_then = dac::capture_cost(dac_model, s.dac.horizon_capacity_tpy());

  auto h2_cost = [&](double capex) {
    auto a = plant(s.hydrogen, capex);
    a.utilization = e.hydrogen_utilization;
    a.electricity_price_usd_per_kwh = e.electricity_price_usd_per_kwh;
    return hydrogen::lcoh(a);
  };

  std::vector<double> now_values, then_values, reductions;
  for (auto r : kAllRegions) {
    const auto t = s.hydrogen.reference_technology[index(r)];
    EkeroseneRegionRow row;
    row.region = r;
    row.technology = t;
    row.h2_current_usd_per_kg =
        h2_cost(electrolysis::current_capital_cost(models.base, r, t).total);
    row.h2_projected_usd_per_kg =
        h2_cost(electrolysis::project_capital_cost(models.base, r, t).total);
    row.co2_current_usd_per_t = co2_now;
    row.co2_projected_usd_per_t = co2_then;
    row.lcoek_current_usd_per_gal =
        ekerosene::lcoek(out.assumptions, row.h2_current_usd_per_kg, co2_now);
    row.lcoek_projected_usd_per_gal =
        ekerosene::lcoek(out.assumptions, row.h2_projected_usd_per_kg, co2_then);
    row.lcoek_projected_subsidized_usd_per_gal =
        ekerosene::lcoek(subsidized, row.h2_projected_usd_per_kg, co2_then);
    row.reduction_usd_per_gal = row.lcoek_current_usd_per_gal - row.lcoek_projected_usd_per_gal;
    now_values.push_back(row.lcoek_current_usd_per_gal);
    then_values.push_back(row.lcoek_projected_usd_per_gal);
    reductions.push_back(row.reduction_usd_per_gal);
    out.regions.push_back(row);
  }
  out.lcoek_current_usd_per_gal = extent(now_values);
  out.lcoek_projected_usd_per_gal = extent(then_values);
  out.reduction_usd_per_gal = extent(reductions);
  out.flight_premium_current_usd = flight_premium_range(e.flight, out.lcoek_current_usd_per_gal);
  out.flight_premium_projected_usd =
      flight_premium_range(e.flight, out.lcoek_projected_usd_per_gal);
  out.surface = kernels::lcoek_surface(out.assumptions, e.h2_cost_grid_usd_per_kg,
                                       e.co2_cost_grid_usd_per_t, exec);
  return out;
}

ResultBundle run_full_projection(const Scenario& s, std::span<const Section> sections,
                                 kernels::Execution exec) {
  ResultBundle out;
  out.engine_version = kVersion;
  out.scenario_name = s.name;
  out.effective_config = scenario::to_json(s);

  auto wanted = [&](Section sec) {
    return sections.empty() || std::find(sections.begin(), sections.end(), sec) != sections.end();
  };
  auto guarded = [&](Section sec, auto&& body) {
    if (!wanted(sec)) return;
    try {
      body();
    } catch (const std::exception& e) {
      out.errors[std::string(key(sec))] = e.what();
    }
  };
  guarded(Section::Electrolysis, [&] { out.electrolysis = run_electrolysis(s); });
  guarded(Section::Hydrogen, [&] { out.hydrogen = run_hydrogen(s, exec); });
  guarded(Section::Dac, [&] { out.dac = run_dac(s, exec); });
  guarded(Section::Ekerosene, [&] { out.ekerosene = run_ekerosene(s, exec); });
  return out;
}

}  // namespace expcurve::projection
