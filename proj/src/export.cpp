#include "expcurve/export.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "expcurve/scenario.hpp"

namespace expcurve::io {

using json = nlohmann::json;
using electrolysis::index;
using electrolysis::key;
using projection::ResultBundle;

namespace {

json range_json(const ProjectionRange& r) { return {{"lo", r.lo}, {"mid", r.mid}, {"hi", r.hi}}; }
json bounds_json(const Bounds& b) { return {{"lo", b.lo}, {"hi", b.hi}}; }

json grid_json(const kernels::Grid& g, std::string_view row_axis, std::string_view col_axis,
               std::string_view value_unit) {
  json values = json::array();
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.cols.size(); ++c) row.push_back(g.at(r, c));
    values.push_back(std::move(row));
  }
  return {{"row_axis", row_axis}, {"col_axis", col_axis}, {"value_unit", value_unit},
          {"rows", g.rows},       {"cols", g.cols},       {"values", std::move(values)}};
}

json breakdown_json(const electrolysis::CostBreakdown& b) {
  return {{"stack_usd_per_kw", b.stack},
          {"bop_epc_usd_per_kw", b.bop_epc},
          {"total_usd_per_kw", b.total}};
}

json electrolysis_json(const projection::ElectrolysisResult& e) {
  json stacks = json::object();
  for (auto t : electrolysis::kAllTechnologies) {
    stacks[std::string(key(t))] = {
        {"current_capacity_kw", e.stack_capacity_current_kw[index(t)]},
        {"horizon_capacity_kw", e.stack_capacity_horizon_kw[index(t)]}};
  }
  json regions = json::object();
  for (auto r : electrolysis::kAllRegions)
    regions[std::string(key(r))] = {{"horizon_capacity_kw", e.regional_capacity_horizon_kw[index(r)]}};
  json rows = json::array();
  for (const auto& row : e.rows) {
    rows.push_back({{"region", key(row.region)},
                    {"technology", key(row.technology)},
                    {"current", breakdown_json(row.current)},
                    {"projected", breakdown_json(row.projected)},
                    {"projected_total_range_usd_per_kw", range_json(row.projected_total_range)},
                    {"decline_fraction", row.decline_fraction}});
  }
  return {{"stacks", stacks},
          {"regions", regions},
          {"global_capacity_horizon_kw", e.global_capacity_horizon_kw},
          {"costs", rows},
          {"min_decline_fraction", e.min_decline_fraction},
          {"max_decline_fraction", e.max_decline_fraction}};
}

json hydrogen_json(const projection::HydrogenResult& h) {
  json capital = json::array();
  for (const auto& row : h.capital_contribution) {
    capital.push_back({{"region", key(row.region)},
                       {"technology", key(row.technology)},
                       {"current_usd_per_kg", row.current_usd_per_kg},
                       {"projected_usd_per_kg", range_json(row.projected_usd_per_kg)}});
  }
  json regions = json::array();
  constexpr std::string_view u = "utilization";
  for (const auto& reg : h.regions) {
    regions.push_back(
        {{"region", key(reg.region)},
         {"technology", key(reg.technology)},
         {"capex_current_usd_per_kw", reg.capex_current_usd_per_kw},
         {"capex_projected_usd_per_kw", range_json(reg.capex_projected_usd_per_kw)},
         {"lcoh_current", grid_json(reg.lcoh_current, u, "electricity_price_usd_per_kwh", "usd_per_kg")},
         {"lcoh_projected",
          grid_json(reg.lcoh_projected, u, "electricity_price_usd_per_kwh", "usd_per_kg")},
         {"lcoh_projected_subsidized", grid_json(reg.lcoh_projected_subsidized, u,
                                                 "electricity_price_usd_per_kwh", "usd_per_kg")},
         {"required_price_projected", grid_json(reg.required_price_projected, u,
                                                "target_lcoh_usd_per_kg", "usd_per_kwh")},
         {"required_price_projected_subsidized",
          grid_json(reg.required_price_projected_subsidized, u, "target_lcoh_usd_per_kg",
                    "usd_per_kwh")},
         {"min_lcoh_projected_subsidized_usd_per_kg", reg.min_lcoh_projected_subsidized},
         {"negative_lcoh_cells", reg.negative_lcoh_cells}});
  }
  return {{"subsidy_usd_per_kg", h.subsidy_usd_per_kg},
          {"fossil_reference_usd_per_kg", bounds_json(h.fossil_reference_usd_per_kg)},
          {"capital_contribution", capital},
          {"regions", regions},
          {"negative_lcoh", h.negative_lcoh}};
}

json cell_json(const dac::SweepCell& c) {
  return {{"status", dac::key(c.status)},
          {"capacity_tpy", c.capacity_tpy},
          {"investment_usd", c.investment_usd}};
}

json dac_json(const projection::DacResult& d) {
  json cases = json::array();
  for (const auto& c : d.cases) {
    cases.push_back({{"label", c.label},
                     {"learning_rate", c.learning_rate},
                     {"capital_horizon_usd_per_tpy", c.capital_horizon_usd_per_tpy},
                     {"capture_horizon_usd_per_t", c.capture_horizon_usd_per_t},
                     {"net_horizon_low_leak_usd_per_t", c.net_horizon_low_leak_usd_per_t},
                     {"net_horizon_high_leak_usd_per_t", c.net_horizon_high_leak_usd_per_t}});
  }
  json sweeps = json::array();
  for (const auto& s : d.sweeps) {
    json rows = json::array();
    for (const auto& r : s.rows) {
      rows.push_back({{"target_usd_per_t", r.target_usd_per_t},
                      {"low_leakage", cell_json(r.low_leakage)},
                      {"high_leakage", cell_json(r.high_leakage)}});
    }
    sweeps.push_back({{"learning_rate", s.learning_rate}, {"rows", rows}});
  }
  return {{"capacity_current_tpy", d.capacity_current_tpy},
          {"capacity_horizon_tpy", d.capacity_horizon_tpy},
          {"capital_current_usd_per_tpy", d.capital_current_usd_per_tpy},
          {"capture_current_usd_per_t", d.capture_current_usd_per_t},
          {"net_fraction_low_leak", d.net_fraction_low_leak},
          {"net_fraction_high_leak", d.net_fraction_high_leak},
          {"net_current_low_leak_usd_per_t", d.net_current_low_leak_usd_per_t},
          {"net_current_high_leak_usd_per_t", d.net_current_high_leak_usd_per_t},
          {"cases", cases},
          {"capital_horizon_usd_per_tpy", range_json(d.capital_horizon_usd_per_tpy)},
          {"capture_horizon_usd_per_t", range_json(d.capture_horizon_usd_per_t)},
          {"net_horizon_usd_per_t", range_json(d.net_horizon_usd_per_t)},
          {"sweeps", sweeps}};
}

json ekerosene_json(const projection::EkeroseneResult& e) {
  json regions = json::array();
  for (const auto& r : e.regions) {
    regions.push_back({{"region", key(r.region)},
                       {"technology", key(r.technology)},
                       {"h2_current_usd_per_kg", r.h2_current_usd_per_kg},
                       {"h2_projected_usd_per_kg", r.h2_projected_usd_per_kg},
                       {"co2_current_usd_per_t", r.co2_current_usd_per_t},
                       {"co2_projected_usd_per_t", r.co2_projected_usd_per_t},
                       {"lcoek_current_usd_per_gal", r.lcoek_current_usd_per_gal},
                       {"lcoek_projected_usd_per_gal", r.lcoek_projected_usd_per_gal},
                       {"lcoek_projected_subsidized_usd_per_gal",
                        r.lcoek_projected_subsidized_usd_per_gal},
                       {"reduction_usd_per_gal", r.reduction_usd_per_gal}});
  }
  const auto& a = e.assumptions;
  return {{"assumptions",
           {{"h2_intensity_kg_per_kg", a.h2_intensity_kg_per_kg},
            {"co2_intensity_kg_per_kg", a.co2_intensity_kg_per_kg},
            {"kg_per_gallon", a.kg_per_gallon()}}},
          {"regions", regions},
          {"surface", grid_json(e.surface, "h2_cost_usd_per_kg", "co2_cost_usd_per_t",
                                "usd_per_gal")},
          {"lcoek_current_usd_per_gal", bounds_json(e.lcoek_current_usd_per_gal)},
          {"lcoek_projected_usd_per_gal", bounds_json(e.lcoek_projected_usd_per_gal)},
          {"reduction_usd_per_gal", bounds_json(e.reduction_usd_per_gal)},
          {"flight_premium_current_usd", bounds_json(e.flight_premium_current_usd)},
          {"flight_premium_projected_usd", bounds_json(e.flight_premium_projected_usd)}};
}

std::string num(double v) { return fmt::format("{}", v); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << text;
  if (!out) throw std::runtime_error(fmt::format("write failed for '{}'", path.string()));
}

void grid_rows(Table& t, std::vector<std::string> prefix, const kernels::Grid& g) {
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    for (std::size_t c = 0; c < g.cols.size(); ++c) {
      auto row = prefix;
      row.push_back(num(g.rows[r]));
      row.push_back(num(g.cols[c]));
      row.push_back(num(g.at(r, c)));
      t.rows.push_back(std::move(row));
    }
  }
}

}  // namespace

json to_json(const ResultBundle& bundle) {
  json results = json::object();
  if (bundle.electrolysis) results["electrolysis"] = electrolysis_json(*bundle.electrolysis);
  if (bundle.hydrogen) results["hydrogen"] = hydrogen_json(*bundle.hydrogen);
  if (bundle.dac) results["dac"] = dac_json(*bundle.dac);
  if (bundle.ekerosene) results["ekerosene"] = ekerosene_json(*bundle.ekerosene);
  return {{"engine_version", bundle.engine_version},
          {"scenario", bundle.scenario_name},
          {"effective_config", bundle.effective_config},
          {"errors", bundle.errors},
          {"results", std::move(results)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<Table> to_tables(const ResultBundle& bundle) {
  std::vector<Table> out;

  if (const auto& e = bundle.electrolysis) {
    Table costs{"electrolysis_costs",
                {"region", "technology", "current_stack_usd_per_kw",
                 "current_bop_epc_usd_per_kw", "current_total_usd_per_kw",
                 "projected_stack_usd_per_kw", "projected_bop_epc_usd_per_kw",
                 "projected_total_usd_per_kw", "projected_total_lo_usd_per_kw",
                 "projected_total_hi_usd_per_kw", "decline_fraction"},
                {}};
    for (const auto& r : e->rows) {
      costs.rows.push_back({std::string(key(r.region)), std::string(key(r.technology)),
                            num(r.current.stack), num(r.current.bop_epc), num(r.current.total),
                            num(r.projected.stack), num(r.projected.bop_epc),
                            num(r.projected.total), num(r.projected_total_range.lo),
                            num(r.projected_total_range.hi), num(r.decline_fraction)});
    }
    out.push_back(std::move(costs));

    Table deploy{"electrolysis_deployment", {"scope", "name", "current_capacity_kw",
                                             "horizon_capacity_kw"}, {}};
    for (auto t : electrolysis::kAllTechnologies) {
      deploy.rows.push_back({"stack", std::string(key(t)),
                             num(e->stack_capacity_current_kw[index(t)]),
                             num(e->stack_capacity_horizon_kw[index(t)])});
    }
    const auto& config = bundle.effective_config["electrolysis"]["regions"];
    for (auto r : electrolysis::kAllRegions) {
      const auto k = std::string(key(r));
      const double current = config.contains(k) ? config[k]["current_capacity_kw"].get<double>()
                                                : 0.0;
      deploy.rows.push_back(
          {"region", k, num(current), num(e->regional_capacity_horizon_kw[index(r)])});
    }
    out.push_back(std::move(deploy));
  }

  if (const auto& h = bundle.hydrogen) {
    Table capital{"hydrogen_capital",
                  {"region", "technology", "current_usd_per_kg", "projected_usd_per_kg",
                   "projected_lo_usd_per_kg", "projected_hi_usd_per_kg"},
                  {}};
    for (const auto& r : h->capital_contribution) {
      capital.rows.push_back({std::string(key(r.region)), std::string(key(r.technology)),
                              num(r.current_usd_per_kg), num(r.projected_usd_per_kg.mid),
                              num(r.projected_usd_per_kg.lo), num(r.projected_usd_per_kg.hi)});
    }
    out.push_back(std::move(capital));

    Table lcoh{"hydrogen_lcoh",
               {"region", "technology", "case", "utilization", "electricity_price_usd_per_kwh",
                "lcoh_usd_per_kg"},
               {}};
    Table price{"hydrogen_required_price",
                {"region", "technology", "case", "utilization", "target_lcoh_usd_per_kg",
                 "electricity_price_usd_per_kwh"},
                {}};
    for (const auto& reg : h->regions) {
      const std::string r(key(reg.region)), t(key(reg.technology));
      grid_rows(lcoh, {r, t, "current"}, reg.lcoh_current);
      grid_rows(lcoh, {r, t, "projected"}, reg.lcoh_projected);
      grid_rows(lcoh, {r, t, "projected_subsidized"}, reg.lcoh_projected_subsidized);
      grid_rows(price, {r, t, "projected"}, reg.required_price_projected);
      grid_rows(price, {r, t, "projected_subsidized"}, reg.required_price_projected_subsidized);
    }
    out.push_back(std::move(lcoh));
    out.push_back(std::move(price));
  }

  if (const auto& d = bundle.dac) {
    Table cases{"dac_cases",
                {"case", "learning_rate", "capacity_tpy", "capital_usd_per_tpy",
                 "capture_usd_per_t", "net_low_leak_usd_per_t", "net_high_leak_usd_per_t"},
                {}};
    const double base_rate = d->cases.size() > 1 ? d->cases[1].learning_rate : 0.0;
    cases.rows.push_back({"current", num(base_rate), num(d->capacity_current_tpy),
                          num(d->capital_current_usd_per_tpy), num(d->capture_current_usd_per_t),
                          num(d->net_current_low_leak_usd_per_t),
                          num(d->net_current_high_leak_usd_per_t)});
    for (const auto& c : d->cases) {
      cases.rows.push_back({c.label, num(c.learning_rate), num(d->capacity_horizon_tpy),
                            num(c.capital_horizon_usd_per_tpy), num(c.capture_horizon_usd_per_t),
                            num(c.net_horizon_low_leak_usd_per_t),
                            num(c.net_horizon_high_leak_usd_per_t)});
    }
    out.push_back(std::move(cases));

    Table sweep{"dac_sweep",
                {"learning_rate", "target_usd_per_t", "leakage", "status", "capacity_tpy",
                 "investment_usd"},
                {}};
    for (const auto& s : d->sweeps) {
      for (const auto& r : s.rows) {
        for (const auto& [label, cell] :
             {std::pair{"low", r.low_leakage}, std::pair{"high", r.high_leakage}}) {
          sweep.rows.push_back({num(s.learning_rate), num(r.target_usd_per_t), label,
                                std::string(dac::key(cell.status)), num(cell.capacity_tpy),
                                num(cell.investment_usd)});
        }
      }
    }
    out.push_back(std::move(sweep));
  }

  if (const auto& e = bundle.ekerosene) {
    Table regions{"ekerosene_regions",
                  {"region", "technology", "h2_current_usd_per_kg", "h2_projected_usd_per_kg",
                   "co2_current_usd_per_t", "co2_projected_usd_per_t",
                   "lcoek_current_usd_per_gal", "lcoek_projected_usd_per_gal",
                   "lcoek_projected_subsidized_usd_per_gal", "reduction_usd_per_gal"},
                  {}};
    for (const auto& r : e->regions) {
      regions.rows.push_back(
          {std::string(key(r.region)), std::string(key(r.technology)),
           num(r.h2_current_usd_per_kg), num(r.h2_projected_usd_per_kg),
           num(r.co2_current_usd_per_t), num(r.co2_projected_usd_per_t),
           num(r.lcoek_current_usd_per_gal), num(r.lcoek_projected_usd_per_gal),
           num(r.lcoek_projected_subsidized_usd_per_gal), num(r.reduction_usd_per_gal)});
    }
    out.push_back(std::move(regions));

    Table surface{"ekerosene_surface", {"h2_cost_usd_per_kg", "co2_cost_usd_per_t",
                                        "lcoek_usd_per_gal"}, {}};
    grid_rows(surface, {}, e->surface);
    out.push_back(std::move(surface));

    Table flight{"flight_premium",
                 {"case", "lcoek_lo_usd_per_gal", "lcoek_hi_usd_per_gal", "premium_lo_usd",
                  "premium_hi_usd"},
                 {}};
    flight.rows.push_back({"current", num(e->lcoek_current_usd_per_gal.lo),
                           num(e->lcoek_current_usd_per_gal.hi),
                           num(e->flight_premium_current_usd.lo),
                           num(e->flight_premium_current_usd.hi)});
    flight.rows.push_back({"projected", num(e->lcoek_projected_usd_per_gal.lo),
                           num(e->lcoek_projected_usd_per_gal.hi),
                           num(e->flight_premium_projected_usd.lo),
                           num(e->flight_premium_projected_usd.hi)});
    out.push_back(std::move(flight));
  }

  if (!bundle.errors.empty()) {
    Table errors{"errors", {"section", "message"}, {}};
    for (const auto& [section, message] : bundle.errors) errors.rows.push_back({section, message});
    out.push_back(std::move(errors));
  }
  return out;
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

std::filesystem::path write_json(const std::filesystem::path& dir, const ResultBundle& bundle) {
  std::filesystem::create_directories(dir);
  const auto path = dir / "bundle.json";
  write_text(path, dump(to_json(bundle)));
  return path;
}

std::vector<std::filesystem::path> write_csv(const std::filesystem::path& dir,
                                             const ResultBundle& bundle) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const auto& t : to_tables(bundle)) {
    paths.push_back(dir / (t.name + ".csv"));
    write_text(paths.back(), to_csv(t));
  }
  return paths;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot read '{}'", path.string()));
  return json::parse(in);
}

}  // namespace expcurve::io
