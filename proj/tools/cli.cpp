#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "expcurve/error.hpp"
#include "expcurve/export.hpp"
#include "expcurve/hydrogen.hpp"
#include "expcurve/projection.hpp"
#include "expcurve/scenario.hpp"
#include "expcurve/version.hpp"

namespace expcurve::cli {

namespace {

using json = nlohmann::json;

struct Common {
  std::string scenario = "base-2030";
  bool json_output = false;
};

void add_common(CLI::App& cmd, Common& c) {
  cmd.add_option("-s,--scenario", c.scenario, "Bundled scenario name or path to a YAML file")
      ->capture_default_str();
  cmd.add_flag("--json", c.json_output, "Print machine-readable JSON");
}

scenario::Scenario load(const Common& c) {
  return scenario::resolve_scenario(c.scenario, scenario::custom_scenario_dir_from_env());
}

// --------------------------------------------------------------------------

struct ProjectArgs {
  Common common;
  std::string out_dir;
  std::string format = "json";
  std::vector<std::string> sections;
  bool serial = false;
};

json summarize(const projection::ResultBundle& b) {
  json rows = json::array();
  auto add = [&](std::string_view label, double lo, double hi, std::string_view unit) {
    rows.push_back({{"quantity", label}, {"lo", lo}, {"hi", hi}, {"unit", unit}});
  };
  if (b.electrolysis) {
    add("electrolyzer capital cost decline", 100.0 * b.electrolysis->min_decline_fraction,
        100.0 * b.electrolysis->max_decline_fraction, "%");
  }
  if (b.hydrogen) {
    double lo = 1e300, hi = -1e300;
    for (const auto& r : b.hydrogen->capital_contribution) {
      lo = std::min(lo, r.current_usd_per_kg);
      hi = std::max(hi, r.current_usd_per_kg);
    }
    add("current capital contribution at full load", lo, hi, "USD/kg");
  }
  if (b.dac) {
    add("DAC capital cost, horizon", b.dac->capital_horizon_usd_per_tpy.lo,
        b.dac->capital_horizon_usd_per_tpy.hi, "USD per t/yr");
    add("DAC net removal cost, current", b.dac->net_current_low_leak_usd_per_t,
        b.dac->net_current_high_leak_usd_per_t, "USD/t");
    add("DAC net removal cost, horizon", b.dac->net_horizon_usd_per_t.lo,
        b.dac->net_horizon_usd_per_t.hi, "USD/t");
  }
  if (b.ekerosene) {
    add("e-kerosene cost, current", b.ekerosene->lcoek_current_usd_per_gal.lo,
        b.ekerosene->lcoek_current_usd_per_gal.hi, "USD/gal");
    add("e-kerosene cost reduction", b.ekerosene->reduction_usd_per_gal.lo,
        b.ekerosene->reduction_usd_per_gal.hi, "USD/gal");
    add("flight premium, horizon", b.ekerosene->flight_premium_projected_usd.lo,
        b.ekerosene->flight_premium_projected_usd.hi, "USD/passenger");
  }
  return rows;
}

void print_summary(const json& rows, std::ostream& out) {
  out << fmt::format("{:<44} {:>12} {:>12}  {}\n", "quantity", "lo", "hi", "unit");
  for (const auto& r : rows) {
    out << fmt::format("{:<44} {:>12.2f} {:>12.2f}  {}\n", r["quantity"].get<std::string>(),
                       r["lo"].get<double>(), r["hi"].get<double>(),
                       r["unit"].get<std::string>());
  }
}

int cmd_project(const ProjectArgs& a, std::ostream& out, std::ostream& err) {
  const auto s = load(a.common);
  std::vector<projection::Section> sections;
  for (const auto& name : a.sections) {
    auto sec = projection::parse_section(name);
    if (!sec) {
      err << fmt::format("error: unknown section '{}'\n", name);
      return kInputError;
    }
    sections.push_back(*sec);
  }
  const auto bundle = projection::run_full_projection(
      s, sections, a.serial ? kernels::Execution::Serial : kernels::Execution::Parallel);

  std::vector<std::filesystem::path> files;
  if (a.format == "json") {
    files.push_back(io::write_json(a.out_dir, bundle));
  } else {
    files = io::write_csv(a.out_dir, bundle);
  }

  const auto summary = summarize(bundle);
  if (a.common.json_output) {
    json paths = json::array();
    for (const auto& f : files) paths.push_back(f.string());
    out << io::dump({{"scenario", s.name},
                     {"files", paths},
                     {"summary", summary},
                     {"errors", bundle.errors}});
  } else {
    print_summary(summary, out);
    out << "\nwrote:\n";
    for (const auto& f : files) out << "  " << f.string() << "\n";
  }
  for (const auto& [section, message] : bundle.errors)
    err << fmt::format("error in {}: {}\n", section, message);
  return bundle.errors.empty() ? kOk : kModelError;
}

// --------------------------------------------------------------------------

struct DacTargetArgs {
  Common common;
  double target = 0.0;
  double leakage = 0.0;
  int gwp = 100;
  std::optional<double> learning_rate;
};

int cmd_dac_target(const DacTargetArgs& a, std::ostream& out, std::ostream& err) {
  const auto s = load(a.common);
  const double rate = a.learning_rate.value_or(s.dac.learning_rate);
  const auto model = s.dac.model(rate);
  const auto horizon = a.gwp == 20 ? dac::GwpHorizon::Gwp20 : dac::GwpHorizon::Gwp100;
  const auto leak = dac::make_leakage(a.leakage, horizon, s.dac.gwp);
  const auto cell = dac::evaluate_target(model, leak, a.target);

  json doc{{"target_usd_per_t", a.target},
           {"leak_rate", a.leakage},
           {"gwp_horizon", dac::key(horizon)},
           {"learning_rate", rate},
           {"status", dac::key(cell.status)}};
  if (cell.status == dac::SweepStatus::Ok) {
    doc["current_net_cost_usd_per_t"] =
        dac::net_removal_cost(model, s.dac.current_capacity_tpy, leak);
    doc["required_capacity_tpy"] = cell.capacity_tpy;
    doc["learning_investment_usd"] = cell.investment_usd;
  }

  if (a.common.json_output) {
    out << io::dump(doc);
  } else if (cell.status == dac::SweepStatus::Ok) {
    out << fmt::format("current net cost:     {:.1f} USD/t\n",
                       doc["current_net_cost_usd_per_t"].get<double>());
    out << fmt::format("required capacity:    {:.4g} t/yr ({:.1f}x today)\n", cell.capacity_tpy,
                       cell.capacity_tpy / s.dac.current_capacity_tpy);
    out << fmt::format("learning investment:  {:.4g} USD\n", cell.investment_usd);
  }
  switch (cell.status) {
    case dac::SweepStatus::Ok: return kOk;
    case dac::SweepStatus::Unreachable:
      err << fmt::format("target {} USD/t is unreachable at learning rate {}\n", a.target, rate);
      return kUnreachable;
    case dac::SweepStatus::NoNetRemoval:
      err << fmt::format("leak rate {} cancels all net removal\n", a.leakage);
      return kUnreachable;
  }
  return kModelError;
}

// --------------------------------------------------------------------------

struct LcohArgs {
  Common common;
  std::string region;
  std::string technology;
  double utilization = 1.0;
  double electricity_price = 0.0;
  double subsidy = 0.0;
  std::string year = "2030";
  bool solve_electricity = false;
  std::optional<double> target;
};

int cmd_lcoh(const LcohArgs& a, std::ostream& out, std::ostream& err) {
  const auto s = load(a.common);
  const auto region = electrolysis::parse_region(a.region);
  if (!region) {
    err << fmt::format("error: unknown region '{}' (usa, eu, china, row)\n", a.region);
    return kInputError;
  }
  auto tech = s.hydrogen.reference_technology[electrolysis::index(*region)];
  if (!a.technology.empty()) {
    auto parsed = electrolysis::parse_technology(a.technology);
    if (!parsed) {
      err << fmt::format("error: unknown technology '{}'\n", a.technology);
      return kInputError;
    }
    tech = *parsed;
  }
  if (a.solve_electricity && !a.target) {
    err << "error: --solve-electricity needs --target\n";
    return kInputError;
  }

  const auto model = electrolysis::build_model(s.electrolysis);
  const double capex = a.year == "current"
                           ? electrolysis::current_capital_cost(model, *region, tech).total
                           : electrolysis::project_capital_cost(model, *region, tech).total;

  hydrogen::HydrogenPlantAssumptions plant;
  plant.capex_usd_per_kw = capex;
  plant.specific_energy_kwh_per_kg = s.hydrogen.specific_energy_kwh_per_kg;
  plant.utilization = a.utilization;
  plant.electricity_price_usd_per_kwh = a.electricity_price;
  plant.subsidy_usd_per_kg = a.subsidy;
  plant.financial = s.hydrogen.financial;

  json doc{{"region", electrolysis::key(*region)},
           {"technology", electrolysis::key(tech)},
           {"year", a.year},
           {"capex_usd_per_kw", capex},
           {"utilization", a.utilization},
           {"subsidy_usd_per_kg", a.subsidy},
           {"capital_contribution_usd_per_kg", hydrogen::capital_contribution(plant)}};
  int code = kOk;
  if (a.solve_electricity) {
    const double price = hydrogen::required_electricity_price(plant, *a.target);
    doc["target_lcoh_usd_per_kg"] = *a.target;
    doc["required_electricity_price_usd_per_kwh"] = price;
    doc["attainable"] = price >= 0.0;
    if (price < 0.0) code = kUnreachable;
  } else {
    doc["electricity_price_usd_per_kwh"] = a.electricity_price;
    doc["lcoh_usd_per_kg"] = hydrogen::lcoh(plant);
  }

  if (a.common.json_output) {
    out << io::dump(doc);
  } else {
    out << fmt::format("{} {} ({}): capex {:.0f} USD/kW\n", a.region, electrolysis::key(tech),
                       a.year, capex);
    out << fmt::format("capital contribution: {:.3f} USD/kg\n",
                       doc["capital_contribution_usd_per_kg"].get<double>());
    if (a.solve_electricity) {
      out << fmt::format("required electricity price: {:.4f} USD/kWh\n",
                         doc["required_electricity_price_usd_per_kwh"].get<double>());
    } else {
      out << fmt::format("LCOH: {:.3f} USD/kg\n", doc["lcoh_usd_per_kg"].get<double>());
    }
  }
  if (code == kUnreachable)
    err << fmt::format("target {} USD/kg is not reachable at any non-negative price\n", *a.target);
  return code;
}

// --------------------------------------------------------------------------

int cmd_scenarios(bool json_output, std::ostream& out) {
  const auto entries = scenario::list_scenarios(scenario::custom_scenario_dir_from_env());
  if (json_output) {
    json arr = json::array();
    for (const auto& e : entries)
      arr.push_back({{"name", e.name}, {"description", e.description}, {"bundled", e.bundled}});
    out << io::dump(arr);
  } else {
    for (const auto& e : entries)
      out << fmt::format("{:<20} {}{}\n", e.name, e.description, e.bundled ? "" : " (custom)");
  }
  return kOk;
}

int cmd_config(const Common& c, std::ostream& out) {
  out << io::dump(scenario::to_json(load(c)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Experience-curve cost projections for hydrogen, DAC and e-kerosene", "expcurve"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ProjectArgs project;
  auto* p = app.add_subcommand("project", "Run every section and export the results");
  add_common(*p, project.common);
  p->add_option("-o,--out", project.out_dir, "Output directory")->required();
  p->add_option("-f,--format", project.format, "Export format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  p->add_option("--sections", project.sections,
                "Comma-separated subset of electrolysis,hydrogen,dac,ekerosene")
      ->delimiter(',');
  p->add_flag("--serial", project.serial, "Use the serial kernels");

  DacTargetArgs dac_target;
  auto* d = app.add_subcommand("dac-target", "Capacity and investment to reach a net removal cost");
  add_common(*d, dac_target.common);
  d->add_option("-t,--target", dac_target.target, "Target net removal cost, USD/tCO2")
      ->required();
  d->add_option("-l,--leakage", dac_target.leakage, "Upstream methane leak rate (fraction)")
      ->required()
      ->check(CLI::Range(0.0, 0.999999));
  d->add_option("--gwp", dac_target.gwp, "GWP horizon in years")
      ->check(CLI::IsMember({20, 100}))
      ->capture_default_str();
  d->add_option("--learning-rate", dac_target.learning_rate,
                "Override the scenario's DAC learning rate");

  LcohArgs lcoh;
  auto* l = app.add_subcommand("lcoh", "Levelized cost of hydrogen for one plant");
  add_common(*l, lcoh.common);
  l->add_option("-r,--region", lcoh.region, "usa, eu, china or row")->required();
  l->add_option("--technology", lcoh.technology,
                "Stack technology (defaults to the region's reference)");
  l->add_option("-u,--utilization", lcoh.utilization, "Capacity factor in (0, 1]")
      ->capture_default_str();
  l->add_option("-e,--electricity-price", lcoh.electricity_price, "USD/kWh")
      ->capture_default_str();
  l->add_option("--subsidy", lcoh.subsidy, "USD/kg")->capture_default_str();
  l->add_option("-y,--year", lcoh.year, "current or 2030")
      ->check(CLI::IsMember({"current", "2030"}))
      ->capture_default_str();
  l->add_flag("--solve-electricity", lcoh.solve_electricity,
              "Solve for the electricity price that meets --target");
  l->add_option("--target", lcoh.target, "Target LCOH, USD/kg");

  bool list_json = false;
  auto* sc = app.add_subcommand("scenarios", "List bundled and custom scenarios");
  sc->add_flag("--json", list_json, "Print machine-readable JSON");

  Common config;
  auto* cf = app.add_subcommand("config", "Print a scenario's effective configuration");
  cf->add_option("-s,--scenario", config.scenario, "Scenario name or path")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (p->parsed()) return cmd_project(project, out, err);
    if (d->parsed()) return cmd_dac_target(dac_target, out, err);
    if (l->parsed()) return cmd_lcoh(lcoh, out, err);
    if (sc->parsed()) return cmd_scenarios(list_json, out);
    if (cf->parsed()) return cmd_config(config, out);
  } catch (const scenario::IoError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const scenario::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const scenario::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ModelError& e) {
    err << fmt::format("error ({}): {}\n", to_string(e.code()), e.what());
    if (e.code() == ErrorCode::UnreachableTarget) return kUnreachable;
    if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::ZeroUtilization)
      return kInputError;
    return kModelError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kModelError;
  }
  return kInputError;
}

}  // namespace expcurve::cli
