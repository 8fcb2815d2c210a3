#include "expcurve/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "bundled.hpp"
#include "expcurve/error.hpp"

namespace expcurve::scenario {

using json = nlohmann::json;
using electrolysis::index;
using electrolysis::kAllRegions;
using electrolysis::kAllTechnologies;
using electrolysis::key;

namespace {

// ---------------------------------------------------------------------------
// Defaults

constexpr double kConsistencyTolerance = 1e-6;

electrolysis::RegionCalibration region(double current, double horizon, double rate,
                                       double pem_bop, double alkaline_bop) {
  return {current, horizon, rate, {pem_bop, pem_bop, alkaline_bop, alkaline_bop}};
}

// ---------------------------------------------------------------------------
// YAML -> JSON

std::optional<json> typed_scalar(const std::string& s) {
  static const std::set<std::string> nulls{"~", "null", "Null", "NULL"};
  static const std::set<std::string> trues{"true", "True", "TRUE"};
  static const std::set<std::string> falses{"false", "False", "FALSE"};
  if (nulls.count(s)) return json(nullptr);
  if (trues.count(s)) return json(true);
  if (falses.count(s)) return json(false);
  if (s.empty()) return std::nullopt;

  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  static const std::regex integer(R"([-+]?[0-9]+)");
  if (std::regex_match(s, integer)) {
    std::int64_t v = 0;
    if (auto [p, ec] = std::from_chars(first, last, v); ec == std::errc{} && p == last)
      return json(v);
  }
  static const std::regex real(R"([-+]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][-+]?[0-9]+)?)");
  if (std::regex_match(s, real)) {
    double v = 0.0;
    if (auto [p, ec] = std::from_chars(first, last, v); ec == std::errc{} && p == last)
      return json(v);
  }
  return std::nullopt;
}

[[noreturn]] void throw_at(std::string_view origin, const YAML::Mark& mark,
                           const std::string& message) {
  throw ParseError(std::string(origin), mark.line + 1, mark.column + 1, message);
}

json convert(const YAML::Node& node, std::string_view origin) {
  switch (node.Type()) {
    case YAML::NodeType::Undefined:
    case YAML::NodeType::Null: return nullptr;
    case YAML::NodeType::Scalar: {
      if (node.Tag() == "!") return node.Scalar();  // quoted
      if (auto v = typed_scalar(node.Scalar())) return *v;
      return node.Scalar();
    }
    case YAML::NodeType::Sequence: {
      json arr = json::array();
      for (const auto& item : node) arr.push_back(convert(item, origin));
      return arr;
    }
    case YAML::NodeType::Map: {
      json obj = json::object();
      for (const auto& kv : node) {
        if (!kv.first.IsScalar()) throw_at(origin, kv.first.Mark(), "mapping keys must be scalars");
        const auto k = kv.first.Scalar();
        if (obj.contains(k)) throw_at(origin, kv.first.Mark(), fmt::format("duplicate key '{}'", k));
        obj[k] = convert(kv.second, origin);
      }
      return obj;
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Document reader

std::string join(std::string_view path, std::string_view k) {
  return path.empty() ? std::string(k) : fmt::format("{}.{}", path, k);
}

const char* type_name(const json& v) {
  if (v.is_object()) return "mapping";
  if (v.is_array()) return "sequence";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_null()) return "null";
  return "number";
}

/// Walks one mapping. Reads of absent keys leave the target untouched; every
/// key that is never read is reported as unknown by done().
class Reader {
 public:
  Reader(const json* node, std::string path, std::vector<FieldIssue>& issues)
      : node_(node), path_(std::move(path)), issues_(issues) {
    if (node_ && !node_->is_object()) {
      issue(path_, fmt::format("expected a mapping, got {}", type_name(*node_)));
      node_ = nullptr;
    }
  }

  Reader child(std::string_view k) {
    return Reader(find(k), join(path_, k), issues_);
  }

  bool has(std::string_view k) const { return node_ && node_->contains(std::string(k)); }

  void number(std::string_view k, double& out) {
    const json* v = find(k);
    if (!v) return;
    if (!v->is_number()) {
      issue(join(path_, k), fmt::format("expected a number, got {}", type_name(*v)));
      return;
    }
    out = v->get<double>();
  }

  void integer(std::string_view k, int& out) {
    const json* v = find(k);
    if (!v) return;
    if (v->is_number()) {
      const double d = v->get<double>();
      if (std::floor(d) == d && std::abs(d) < 1e9) {
        out = static_cast<int>(d);
        return;
      }
    }
    issue(join(path_, k), fmt::format("expected an integer, got {}", v->dump()));
  }

  void string(std::string_view k, std::string& out) {
    const json* v = find(k);
    if (!v) return;
    if (!v->is_string()) {
      issue(join(path_, k), fmt::format("expected a string, got {}", type_name(*v)));
      return;
    }
    out = v->get<std::string>();
  }

  void numbers(std::string_view k, std::vector<double>& out) {
    const json* v = find(k);
    if (!v) return;
    if (!v->is_array()) {
      issue(join(path_, k), fmt::format("expected a sequence of numbers, got {}", type_name(*v)));
      return;
    }
    std::vector<double> tmp;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto& e = (*v)[i];
      if (!e.is_number()) {
        issue(fmt::format("{}[{}]", join(path_, k), i),
              fmt::format("expected a number, got {}", type_name(e)));
        return;
      }
      tmp.push_back(e.get<double>());
    }
    out = std::move(tmp);
  }

  void bounds(std::string_view k, Bounds& out) {
    Reader r = child(k);
    r.number("lo", out.lo);
    r.number("hi", out.hi);
    r.done();
  }

  template <class Enum, class Parse>
  void enumeration(std::string_view k, Enum& out, Parse parse, std::string_view allowed) {
    const json* v = find(k);
    if (!v) return;
    if (v->is_string()) {
      if (auto e = parse(v->get<std::string>())) {
        out = *e;
        return;
      }
    }
    issue(join(path_, k), fmt::format("expected one of {}, got {}", allowed, v->dump()));
  }

  void done() {
    if (!node_) return;
    for (const auto& [k, _] : node_->items()) {
      if (!seen_.count(k)) issue(join(path_, k), "unknown key");
    }
  }

 private:
  const json* find(std::string_view k) {
    if (!node_) return nullptr;
    std::string s(k);
    seen_.insert(s);
    auto it = node_->find(s);
    return it == node_->end() ? nullptr : &*it;
  }

  void issue(std::string field, std::string message) {
    issues_.push_back({std::move(field), std::move(message)});
  }

  const json* node_;
  std::string path_;
  std::vector<FieldIssue>& issues_;
  std::set<std::string> seen_;
};

void read_financial(Reader r, FinancialAssumptions& f) {
  r.number("discount_rate", f.discount_rate);
  r.integer("lifetime_years", f.lifetime_years);
  r.number("fixed_om_fraction", f.fixed_om_fraction);
  r.done();
}

void read_electrolysis(Reader r, Scenario& s) {
  auto& c = s.electrolysis;
  r.number("stack_learning_rate", c.stack_learning_rate);
  {
    Reader m = r.child("market_split");
    m.number("pem_fraction", c.split.pem_fraction);
    m.number("pem_western_fraction", c.split.pem_western_fraction);
    m.number("alkaline_western_fraction", c.split.alkaline_western_fraction);
    m.done();
  }
  {
    Reader stacks = r.child("stacks");
    for (auto t : kAllTechnologies) {
      Reader st = stacks.child(key(t));
      st.number("current_cost_usd_per_kw", c.stacks[index(t)].current_cost_usd_per_kw);
      st.number("current_capacity_kw", c.stacks[index(t)].current_capacity_kw);
      st.done();
    }
    stacks.done();
  }
  {
    Reader regions = r.child("regions");
    for (auto g : kAllRegions) {
      auto& rc = c.regions[index(g)];
      Reader rr = regions.child(key(g));
      rr.number("current_capacity_kw", rc.current_capacity_kw);
      rr.number("horizon_capacity_kw", rc.horizon_capacity_kw);
      rr.number("bop_epc_learning_rate", rc.bop_epc_learning_rate);
      Reader costs = rr.child("bop_epc_cost_usd_per_kw");
      for (auto t : kAllTechnologies) costs.number(key(t), rc.bop_epc_cost_usd_per_kw[index(t)]);
      costs.done();
      rr.done();
    }
    regions.done();
  }
  {
    auto& sens = s.electrolysis_sensitivity;
    Reader sr = r.child("sensitivity");
    sr.bounds("stack_learning_rate", sens.stack_learning_rate);
    Reader bop = sr.child("bop_epc_learning_rate");
    for (auto g : kAllRegions) bop.bounds(key(g), sens.bop_epc_learning_rate[index(g)]);
    bop.done();
    sr.bounds("growth_scale", sens.growth_scale);
    sr.done();
  }
  r.done();
}

void read_hydrogen(Reader r, HydrogenSettings& h) {
  r.number("specific_energy_kwh_per_kg", h.specific_energy_kwh_per_kg);
  read_financial(r.child("financial"), h.financial);
  r.number("subsidy_usd_per_kg", h.subsidy_usd_per_kg);
  {
    Reader ref = r.child("reference_technology");
    for (auto g : kAllRegions) {
      ref.enumeration(key(g), h.reference_technology[index(g)], electrolysis::parse_technology,
                      "western_pem, chinese_pem, western_alkaline, chinese_alkaline");
    }
    ref.done();
  }
  r.numbers("utilization_grid", h.utilization_grid);
  r.numbers("electricity_price_grid_usd_per_kwh", h.electricity_price_grid_usd_per_kwh);
  r.numbers("target_lcoh_usd_per_kg", h.target_lcoh_usd_per_kg);
  r.bounds("fossil_reference_usd_per_kg", h.fossil_reference_usd_per_kg);
  r.done();
}

void read_dac(Reader r, DacSettings& d) {
  {
    Reader cap = r.child("capital");
    cap.number("current_cost_usd_per_tpy", d.current_cost_usd_per_tpy);
    cap.number("current_capacity_tpy", d.current_capacity_tpy);
    cap.number("learning_rate", d.learning_rate);
    cap.done();
  }
  r.number("pipeline_addition_tpy", d.pipeline_addition_tpy);
  read_financial(r.child("financial"), d.financial);
  r.number("capacity_factor", d.capacity_factor);
  r.number("non_learning_opex_usd_per_t", d.non_learning_opex_usd_per_t);
  r.number("gas_intensity_gj_per_t", d.gas_intensity_gj_per_t);
  r.number("methane_mass_per_energy_t_per_gj", d.methane_mass_per_energy_t_per_gj);
  {
    Reader gwp = r.child("gwp");
    gwp.number("gwp20", d.gwp.gwp20);
    gwp.number("gwp100", d.gwp.gwp100);
    gwp.done();
  }
  {
    Reader leak = r.child("leakage");
    leak.number("lo", d.leakage.lo);
    leak.number("hi", d.leakage.hi);
    leak.enumeration("horizon", d.horizon, dac::parse_horizon, "gwp20, gwp100");
    leak.done();
  }
  {
    Reader sens = r.child("sensitivity");
    sens.bounds("learning_rate", d.learning_rate_range);
    sens.bounds("pipeline_scale", d.pipeline_scale);
    sens.done();
  }
  {
    Reader sweep = r.child("sweep");
    sweep.numbers("targets_usd_per_t", d.sweep_targets_usd_per_t);
    sweep.numbers("learning_rates", d.sweep_learning_rates);
    sweep.done();
  }
  r.done();
}

void read_ekerosene(Reader r, EkeroseneSettings& e) {
  r.number("stoich_h2_kg_per_kg", e.stoich_h2_kg_per_kg);
  r.number("stoich_co2_kg_per_kg", e.stoich_co2_kg_per_kg);
  r.number("conversion_multiplier", e.conversion_multiplier);
  r.number("synthesis_levelized_usd_per_kg", e.synthesis_levelized_usd_per_kg);
  r.number("synthesis_electricity_kwh_per_kg", e.synthesis_electricity_kwh_per_kg);
  r.number("electricity_price_usd_per_kwh", e.electricity_price_usd_per_kwh);
  r.number("fuel_density_kg_per_l", e.fuel_density_kg_per_l);
  r.number("subsidy_usd_per_gal", e.subsidy_usd_per_gal);
  r.number("hydrogen_utilization", e.hydrogen_utilization);
  r.numbers("h2_cost_grid_usd_per_kg", e.h2_cost_grid_usd_per_kg);
  r.numbers("co2_cost_grid_usd_per_t", e.co2_cost_grid_usd_per_t);
  {
    Reader f = r.child("flight");
    f.number("distance_km", e.flight.distance_km);
    f.bounds("fuel_burn_l_per_pkm", e.flight.fuel_burn_l_per_pkm);
    f.number("blend", e.flight.blend);
    f.bounds("fossil_price_usd_per_gal", e.flight.fossil_price_usd_per_gal);
    f.done();
  }
  r.done();
}

// ---------------------------------------------------------------------------
// Semantic checks

class Checker {
 public:
  explicit Checker(std::vector<FieldIssue>& issues) : issues_(issues) {}

  void require(bool ok, std::string field, std::string message) {
    if (!ok) issues_.push_back({std::move(field), std::move(message)});
  }
  void positive(double v, std::string field) {
    require(v > 0.0, std::move(field), fmt::format("must be > 0, got {}", v));
  }
  void non_negative(double v, std::string field) {
    require(v >= 0.0, std::move(field), fmt::format("must be >= 0, got {}", v));
  }
  void unit_closed(double v, std::string field) {
    require(v >= 0.0 && v <= 1.0, std::move(field), fmt::format("must be in [0, 1], got {}", v));
  }
  void learning_rate(double v, std::string field) {
    require(v >= 0.0 && v < 1.0, std::move(field), fmt::format("must be in [0, 1), got {}", v));
  }
  void ordered(const Bounds& b, std::string field) {
    require(b.ordered(), std::move(field), fmt::format("lo {} exceeds hi {}", b.lo, b.hi));
  }
  void brackets(const Bounds& b, double base, const std::string& field) {
    require(b.ordered() && b.contains(base), field,
            fmt::format("bounds [{}, {}] must satisfy lo <= {} <= hi", b.lo, b.hi, base));
  }
  void non_empty(const std::vector<double>& v, std::string field) {
    require(!v.empty(), std::move(field), "must not be empty");
  }
  void financial(const FinancialAssumptions& f, const std::string& field) {
    try {
      f.validate();
    } catch (const ModelError& e) {
      require(false, field, e.what());
    }
  }

 private:
  std::vector<FieldIssue>& issues_;
};

std::vector<FieldIssue> check(const Scenario& s) {
  std::vector<FieldIssue> issues;
  Checker c(issues);

  c.require(s.schema_version == kSchemaVersion, "schema_version",
            fmt::format("unsupported schema version {}, expected {}", s.schema_version,
                        kSchemaVersion));
  c.require(!s.name.empty(), "name", "must not be empty");
  c.require(s.horizon_year > s.base_year, "horizon_year",
            fmt::format("must be after base_year {}", s.base_year));

  const auto& el = s.electrolysis;
  c.learning_rate(el.stack_learning_rate, "electrolysis.stack_learning_rate");
  c.unit_closed(el.split.pem_fraction, "electrolysis.market_split.pem_fraction");
  c.unit_closed(el.split.pem_western_fraction, "electrolysis.market_split.pem_western_fraction");
  c.unit_closed(el.split.alkaline_western_fraction,
                "electrolysis.market_split.alkaline_western_fraction");
  double stack_total = 0.0;
  for (auto t : kAllTechnologies) {
    const auto& st = el.stacks[index(t)];
    const auto base = fmt::format("electrolysis.stacks.{}", key(t));
    c.positive(st.current_cost_usd_per_kw, base + ".current_cost_usd_per_kw");
    c.positive(st.current_capacity_kw, base + ".current_capacity_kw");
    stack_total += st.current_capacity_kw;
  }
  double regional_total = 0.0;
  for (auto g : kAllRegions) {
    const auto& rc = el.regions[index(g)];
    const auto base = fmt::format("electrolysis.regions.{}", key(g));
    c.positive(rc.current_capacity_kw, base + ".current_capacity_kw");
    c.require(rc.horizon_capacity_kw >= rc.current_capacity_kw, base + ".horizon_capacity_kw",
              fmt::format("{} kW is below the current {} kW", rc.horizon_capacity_kw,
                          rc.current_capacity_kw));
    c.learning_rate(rc.bop_epc_learning_rate, base + ".bop_epc_learning_rate");
    for (auto t : kAllTechnologies) {
      c.positive(rc.bop_epc_cost_usd_per_kw[index(t)],
                 fmt::format("{}.bop_epc_cost_usd_per_kw.{}", base, key(t)));
    }
    regional_total += rc.current_capacity_kw;
  }
  c.require(std::abs(stack_total - regional_total) <=
                kConsistencyTolerance * std::max(stack_total, regional_total),
            "electrolysis.regions",
            fmt::format("current regional capacity {} kW differs from current stack capacity "
                        "{} kW",
                        regional_total, stack_total));

  const auto& sens = s.electrolysis_sensitivity;
  c.brackets(sens.stack_learning_rate, el.stack_learning_rate,
             "electrolysis.sensitivity.stack_learning_rate");
  c.require(sens.stack_learning_rate.hi < 1.0, "electrolysis.sensitivity.stack_learning_rate",
            "hi must be < 1");
  for (auto g : kAllRegions) {
    const auto field = fmt::format("electrolysis.sensitivity.bop_epc_learning_rate.{}", key(g));
    const auto& b = sens.bop_epc_learning_rate[index(g)];
    c.brackets(b, el.regions[index(g)].bop_epc_learning_rate, field);
    c.require(b.hi < 1.0, field, "hi must be < 1");
  }
  c.brackets(sens.growth_scale, 1.0, "electrolysis.sensitivity.growth_scale");
  c.non_negative(sens.growth_scale.lo, "electrolysis.sensitivity.growth_scale.lo");

  const auto& h = s.hydrogen;
  c.positive(h.specific_energy_kwh_per_kg, "hydrogen.specific_energy_kwh_per_kg");
  c.financial(h.financial, "hydrogen.financial");
  c.non_negative(h.subsidy_usd_per_kg, "hydrogen.subsidy_usd_per_kg");
  c.non_empty(h.utilization_grid, "hydrogen.utilization_grid");
  for (std::size_t i = 0; i < h.utilization_grid.size(); ++i) {
    const double u = h.utilization_grid[i];
    c.require(u > 0.0 && u <= 1.0, fmt::format("hydrogen.utilization_grid[{}]", i),
              fmt::format("must be in (0, 1], got {}", u));
  }
  c.non_empty(h.electricity_price_grid_usd_per_kwh, "hydrogen.electricity_price_grid_usd_per_kwh");
  for (std::size_t i = 0; i < h.electricity_price_grid_usd_per_kwh.size(); ++i) {
    c.non_negative(h.electricity_price_grid_usd_per_kwh[i],
                   fmt::format("hydrogen.electricity_price_grid_usd_per_kwh[{}]", i));
  }
  for (std::size_t i = 0; i < h.target_lcoh_usd_per_kg.size(); ++i) {
    c.non_negative(h.target_lcoh_usd_per_kg[i],
                   fmt::format("hydrogen.target_lcoh_usd_per_kg[{}]", i));
  }
  c.ordered(h.fossil_reference_usd_per_kg, "hydrogen.fossil_reference_usd_per_kg");

  const auto& d = s.dac;
  c.positive(d.current_cost_usd_per_tpy, "dac.capital.current_cost_usd_per_tpy");
  c.positive(d.current_capacity_tpy, "dac.capital.current_capacity_tpy");
  c.learning_rate(d.learning_rate, "dac.capital.learning_rate");
  c.non_negative(d.pipeline_addition_tpy, "dac.pipeline_addition_tpy");
  c.financial(d.financial, "dac.financial");
  c.require(d.capacity_factor > 0.0 && d.capacity_factor <= 1.0, "dac.capacity_factor",
            fmt::format("must be in (0, 1], got {}", d.capacity_factor));
  c.non_negative(d.non_learning_opex_usd_per_t, "dac.non_learning_opex_usd_per_t");
  c.non_negative(d.gas_intensity_gj_per_t, "dac.gas_intensity_gj_per_t");
  c.non_negative(d.methane_mass_per_energy_t_per_gj, "dac.methane_mass_per_energy_t_per_gj");
  c.positive(d.gwp.gwp20, "dac.gwp.gwp20");
  c.positive(d.gwp.gwp100, "dac.gwp.gwp100");
  c.ordered(d.leakage, "dac.leakage");
  c.require(d.leakage.lo >= 0.0 && d.leakage.hi < 1.0, "dac.leakage",
            fmt::format("leak rates must be in [0, 1), got [{}, {}]", d.leakage.lo,
                        d.leakage.hi));
  c.brackets(d.learning_rate_range, d.learning_rate, "dac.sensitivity.learning_rate");
  c.require(d.learning_rate_range.hi < 1.0, "dac.sensitivity.learning_rate", "hi must be < 1");
  c.brackets(d.pipeline_scale, 1.0, "dac.sensitivity.pipeline_scale");
  c.non_negative(d.pipeline_scale.lo, "dac.sensitivity.pipeline_scale.lo");
  try {
    dac::validate_target_grid(d.sweep_targets_usd_per_t);
  } catch (const ModelError& e) {
    c.require(false, "dac.sweep.targets_usd_per_t", e.what());
  }
  for (std::size_t i = 0; i < d.sweep_learning_rates.size(); ++i) {
    c.learning_rate(d.sweep_learning_rates[i], fmt::format("dac.sweep.learning_rates[{}]", i));
  }

  const auto& e = s.ekerosene;
  c.positive(e.stoich_h2_kg_per_kg, "ekerosene.stoich_h2_kg_per_kg");
  c.positive(e.stoich_co2_kg_per_kg, "ekerosene.stoich_co2_kg_per_kg");
  c.require(e.conversion_multiplier >= 1.0, "ekerosene.conversion_multiplier",
            fmt::format("must be >= 1, got {}", e.conversion_multiplier));
  c.non_negative(e.synthesis_levelized_usd_per_kg, "ekerosene.synthesis_levelized_usd_per_kg");
  c.non_negative(e.synthesis_electricity_kwh_per_kg, "ekerosene.synthesis_electricity_kwh_per_kg");
  c.non_negative(e.electricity_price_usd_per_kwh, "ekerosene.electricity_price_usd_per_kwh");
  c.require(e.fuel_density_kg_per_l > 0.7 && e.fuel_density_kg_per_l <= 0.85,
            "ekerosene.fuel_density_kg_per_l",
            fmt::format("must be in (0.7, 0.85], got {}", e.fuel_density_kg_per_l));
  c.non_negative(e.subsidy_usd_per_gal, "ekerosene.subsidy_usd_per_gal");
  c.require(e.hydrogen_utilization > 0.0 && e.hydrogen_utilization <= 1.0,
            "ekerosene.hydrogen_utilization",
            fmt::format("must be in (0, 1], got {}", e.hydrogen_utilization));
  c.non_empty(e.h2_cost_grid_usd_per_kg, "ekerosene.h2_cost_grid_usd_per_kg");
  c.non_empty(e.co2_cost_grid_usd_per_t, "ekerosene.co2_cost_grid_usd_per_t");
  c.positive(e.flight.distance_km, "ekerosene.flight.distance_km");
  c.ordered(e.flight.fuel_burn_l_per_pkm, "ekerosene.flight.fuel_burn_l_per_pkm");
  c.positive(e.flight.fuel_burn_l_per_pkm.lo, "ekerosene.flight.fuel_burn_l_per_pkm.lo");
  c.unit_closed(e.flight.blend, "ekerosene.flight.blend");
  c.ordered(e.flight.fossil_price_usd_per_gal, "ekerosene.flight.fossil_price_usd_per_gal");
  c.positive(e.flight.fossil_price_usd_per_gal.lo, "ekerosene.flight.fossil_price_usd_per_gal.lo");
  return issues;
}

json bounds_json(const Bounds& b) { return {{"lo", b.lo}, {"hi", b.hi}}; }

json financial_json(const FinancialAssumptions& f) {
  return {{"discount_rate", f.discount_rate},
          {"lifetime_years", f.lifetime_years},
          {"fixed_om_fraction", f.fixed_om_fraction}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read scenario file '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_scenario_file(const std::filesystem::path& p) {
  const auto ext = p.extension().string();
  return ext == ".yaml" || ext == ".yml" || ext == ".json";
}

std::string description_of(std::string_view text) {
  try {
    const auto doc = parse_document(text);
    if (doc.is_object() && doc.contains("description") && doc["description"].is_string())
      return doc["description"].get<std::string>();
  } catch (const ParseError&) {
  }
  return {};
}

}  // namespace

// ---------------------------------------------------------------------------

electrolysis::ElectrolyzerConfig Scenario::default_electrolyzer_config() {
  electrolysis::ElectrolyzerConfig c;
  c.stacks = {{{1100.0, 0.90e6}, {900.0, 0.04e6}, {750.0, 1.00e6}, {300.0, 1.56e6}}};
  c.stack_learning_rate = 0.16;
  c.regions = {region(0.3e6, 30e6, 0.075, 1950.0, 2150.0),
               region(0.6e6, 45e6, 0.090, 1750.0, 1900.0),
               region(2.0e6, 50e6, 0.180, 650.0, 500.0),
               region(0.6e6, 25e6, 0.085, 1300.0, 1400.0)};
  c.split = {0.4, 0.5, 0.5};
  return c;
}

electrolysis::ElectrolysisSensitivity Scenario::default_electrolysis_sensitivity() {
  electrolysis::ElectrolysisSensitivity s;
  s.stack_learning_rate = {0.12, 0.20};
  s.bop_epc_learning_rate = {Bounds{0.045, 0.105}, Bounds{0.060, 0.120}, Bounds{0.150, 0.210},
                             Bounds{0.055, 0.115}};
  s.growth_scale = {0.7, 1.3};
  return s;
}

dac::DacCostModel DacSettings::model(double rate) const {
  return dac::DacCostModel{
      curves::LearningCurve(current_cost_usd_per_tpy, current_capacity_tpy, rate),
      financial,
      capacity_factor,
      non_learning_opex_usd_per_t,
      gas_intensity_gj_per_t,
      methane_mass_per_energy_t_per_gj};
}

ekerosene::EkAssumptions EkeroseneSettings::assumptions() const {
  ekerosene::EkAssumptions ek;
  ek.h2_intensity_kg_per_kg = stoich_h2_kg_per_kg * conversion_multiplier;
  ek.co2_intensity_kg_per_kg = stoich_co2_kg_per_kg * conversion_multiplier;
  ek.synthesis_levelized_usd_per_kg = synthesis_levelized_usd_per_kg;
  ek.synthesis_electricity_kwh_per_kg = synthesis_electricity_kwh_per_kg;
  ek.electricity_price_usd_per_kwh = electricity_price_usd_per_kwh;
  ek.fuel_density_kg_per_l = fuel_density_kg_per_l;
  ek.subsidy_usd_per_gal = 0.0;
  return ek;
}

ParseError::ParseError(std::string origin, int line, int column, const std::string& message)
    : std::runtime_error(fmt::format("{}:{}:{}: {}", origin, line, column, message)),
      line_(line),
      column_(column) {}

namespace {
std::string summarize(const std::vector<FieldIssue>& issues) {
  std::string out = fmt::format("scenario has {} invalid field{}", issues.size(),
                                issues.size() == 1 ? "" : "s");
  for (const auto& i : issues) out += fmt::format("\n  {}: {}", i.field, i.message);
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<FieldIssue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

json parse_document(std::string_view text, std::string_view origin) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw_at(origin, e.mark, e.msg);
  } catch (const YAML::Exception& e) {
    throw_at(origin, e.mark, e.msg);
  }
  return convert(root, origin);
}

Scenario from_json(const json& doc) {
  std::vector<FieldIssue> issues;
  Scenario s;
  if (!doc.is_object()) {
    throw ValidationError({{"", fmt::format("scenario must be a mapping, got {}", type_name(doc))}});
  }
  Reader root(&doc, "", issues);
  if (!root.has("schema_version")) issues.push_back({"schema_version", "required"});
  if (!root.has("name")) issues.push_back({"name", "required"});
  root.integer("schema_version", s.schema_version);
  root.string("name", s.name);
  root.string("description", s.description);
  root.integer("base_year", s.base_year);
  root.integer("horizon_year", s.horizon_year);
  read_electrolysis(root.child("electrolysis"), s);
  read_hydrogen(root.child("hydrogen"), s.hydrogen);
  read_dac(root.child("dac"), s.dac);
  read_ekerosene(root.child("ekerosene"), s.ekerosene);
  root.done();

  auto semantic = check(s);
  issues.insert(issues.end(), semantic.begin(), semantic.end());
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return s;
}

void validate(const Scenario& s) {
  auto issues = check(s);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

Scenario load_scenario_text(std::string_view text, std::string_view origin) {
  return from_json(parse_document(text, origin));
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw IoError(fmt::format("scenario file not found: '{}'", path.string()));
  }
  return load_scenario_text(read_file(path), path.string());
}

json to_json(const Scenario& s) {
  const auto& el = s.electrolysis;
  json stacks = json::object();
  for (auto t : kAllTechnologies) {
    const auto& st = el.stacks[index(t)];
    stacks[std::string(key(t))] = {{"current_cost_usd_per_kw", st.current_cost_usd_per_kw},
                                   {"current_capacity_kw", st.current_capacity_kw}};
  }
  json regions = json::object();
  json bop_sens = json::object();
  json reference = json::object();
  for (auto g : kAllRegions) {
    const auto& rc = el.regions[index(g)];
    json costs = json::object();
    for (auto t : kAllTechnologies)
      costs[std::string(key(t))] = rc.bop_epc_cost_usd_per_kw[index(t)];
    regions[std::string(key(g))] = {{"current_capacity_kw", rc.current_capacity_kw},
                                    {"horizon_capacity_kw", rc.horizon_capacity_kw},
                                    {"bop_epc_learning_rate", rc.bop_epc_learning_rate},
                                    {"bop_epc_cost_usd_per_kw", costs}};
    bop_sens[std::string(key(g))] =
        bounds_json(s.electrolysis_sensitivity.bop_epc_learning_rate[index(g)]);
    reference[std::string(key(g))] = key(s.hydrogen.reference_technology[index(g)]);
  }

  const auto& h = s.hydrogen;
  const auto& d = s.dac;
  const auto& e = s.ekerosene;
  return {
      {"schema_version", s.schema_version},
      {"name", s.name},
      {"description", s.description},
      {"base_year", s.base_year},
      {"horizon_year", s.horizon_year},
      {"electrolysis",
       {{"stack_learning_rate", el.stack_learning_rate},
        {"market_split",
         {{"pem_fraction", el.split.pem_fraction},
          {"pem_western_fraction", el.split.pem_western_fraction},
          {"alkaline_western_fraction", el.split.alkaline_western_fraction}}},
        {"stacks", stacks},
        {"regions", regions},
        {"sensitivity",
         {{"stack_learning_rate", bounds_json(s.electrolysis_sensitivity.stack_learning_rate)},
          {"bop_epc_learning_rate", bop_sens},
          {"growth_scale", bounds_json(s.electrolysis_sensitivity.growth_scale)}}}}},
      {"hydrogen",
       {{"specific_energy_kwh_per_kg", h.specific_energy_kwh_per_kg},
        {"financial", financial_json(h.financial)},
        {"subsidy_usd_per_kg", h.subsidy_usd_per_kg},
        {"reference_technology", reference},
        {"utilization_grid", h.utilization_grid},
        {"electricity_price_grid_usd_per_kwh", h.electricity_price_grid_usd_per_kwh},
        {"target_lcoh_usd_per_kg", h.target_lcoh_usd_per_kg},
        {"fossil_reference_usd_per_kg", bounds_json(h.fossil_reference_usd_per_kg)}}},
      {"dac",
       {{"capital",
         {{"current_cost_usd_per_tpy", d.current_cost_usd_per_tpy},
          {"current_capacity_tpy", d.current_capacity_tpy},
          {"learning_rate", d.learning_rate}}},
        {"pipeline_addition_tpy", d.pipeline_addition_tpy},
        {"financial", financial_json(d.financial)},
        {"capacity_factor", d.capacity_factor},
        {"non_learning_opex_usd_per_t", d.non_learning_opex_usd_per_t},
        {"gas_intensity_gj_per_t", d.gas_intensity_gj_per_t},
        {"methane_mass_per_energy_t_per_gj", d.methane_mass_per_energy_t_per_gj},
        {"gwp", {{"gwp20", d.gwp.gwp20}, {"gwp100", d.gwp.gwp100}}},
        {"leakage", {{"lo", d.leakage.lo}, {"hi", d.leakage.hi}, {"horizon", key(d.horizon)}}},
        {"sensitivity",
         {{"learning_rate", bounds_json(d.learning_rate_range)},
          {"pipeline_scale", bounds_json(d.pipeline_scale)}}},
        {"sweep",
         {{"targets_usd_per_t", d.sweep_targets_usd_per_t},
          {"learning_rates", d.sweep_learning_rates}}}}},
      {"ekerosene",
       {{"stoich_h2_kg_per_kg", e.stoich_h2_kg_per_kg},
        {"stoich_co2_kg_per_kg", e.stoich_co2_kg_per_kg},
        {"conversion_multiplier", e.conversion_multiplier},
        {"synthesis_levelized_usd_per_kg", e.synthesis_levelized_usd_per_kg},
        {"synthesis_electricity_kwh_per_kg", e.synthesis_electricity_kwh_per_kg},
        {"electricity_price_usd_per_kwh", e.electricity_price_usd_per_kwh},
        {"fuel_density_kg_per_l", e.fuel_density_kg_per_l},
        {"subsidy_usd_per_gal", e.subsidy_usd_per_gal},
        {"hydrogen_utilization", e.hydrogen_utilization},
        {"h2_cost_grid_usd_per_kg", e.h2_cost_grid_usd_per_kg},
        {"co2_cost_grid_usd_per_t", e.co2_cost_grid_usd_per_t},
        {"flight",
         {{"distance_km", e.flight.distance_km},
          {"fuel_burn_l_per_pkm", bounds_json(e.flight.fuel_burn_l_per_pkm)},
          {"blend", e.flight.blend},
          {"fossil_price_usd_per_gal", bounds_json(e.flight.fossil_price_usd_per_gal)}}}}},
  };
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<CatalogEntry> bundled_scenarios() {
  std::vector<CatalogEntry> out;
  for (const auto& b : detail::bundled_texts())
    out.push_back({std::string(b.name), description_of(b.text), true});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::string_view bundled_scenario_text(std::string_view name) {
  for (const auto& b : detail::bundled_texts())
    if (b.name == name) return b.text;
  return {};
}

std::vector<CatalogEntry> list_scenarios(const std::filesystem::path& custom_dir) {
  auto out = bundled_scenarios();
  if (custom_dir.empty()) return out;
  std::error_code ec;
  if (!std::filesystem::is_directory(custom_dir, ec)) return out;
  std::vector<CatalogEntry> custom;
  for (const auto& entry : std::filesystem::directory_iterator(custom_dir, ec)) {
    if (!entry.is_regular_file() || !is_scenario_file(entry.path())) continue;
    std::string text;
    try {
      text = read_file(entry.path());
    } catch (const IoError&) {
      continue;
    }
    custom.push_back({entry.path().stem().string(), description_of(text), false});
  }
  std::sort(custom.begin(), custom.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  out.insert(out.end(), custom.begin(), custom.end());
  return out;
}

std::optional<json> catalog_document(std::string_view name,
                                     const std::filesystem::path& custom_dir) {
  const std::filesystem::path as_path(name);
  if (name.empty() || as_path.filename() != as_path || name == "." || name == "..")
    return std::nullopt;
  std::error_code ec;
  if (!custom_dir.empty()) {
    for (const char* ext : {".yaml", ".yml", ".json"}) {
      auto candidate = custom_dir / (std::string(name) + ext);
      if (std::filesystem::is_regular_file(candidate, ec))
        return parse_document(read_file(candidate), candidate.string());
    }
  }
  if (auto text = bundled_scenario_text(name); !text.empty())
    return parse_document(text, fmt::format("<bundled:{}>", name));
  return std::nullopt;
}

json resolve_document(std::string_view name_or_path, const std::filesystem::path& custom_dir) {
  const std::filesystem::path direct(name_or_path);
  std::error_code ec;
  if (std::filesystem::is_regular_file(direct, ec))
    return parse_document(read_file(direct), direct.string());
  if (auto doc = catalog_document(name_or_path, custom_dir)) return *doc;
  throw IoError(fmt::format("scenario not found: '{}'", name_or_path));
}

Scenario resolve_scenario(std::string_view name_or_path, const std::filesystem::path& custom_dir) {
  return from_json(resolve_document(name_or_path, custom_dir));
}

std::filesystem::path custom_scenario_dir_from_env() {
  const char* dir = std::getenv("EXPCURVE_SCENARIO_DIR");
  return dir ? std::filesystem::path(dir) : std::filesystem::path();
}

}  // namespace expcurve::scenario
