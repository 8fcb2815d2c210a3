#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expcurve/dac.hpp"
#include "expcurve/ekerosene.hpp"
#include "expcurve/electrolysis.hpp"
#include "expcurve/finance.hpp"
#include "expcurve/range.hpp"

namespace expcurve::scenario {

inline constexpr int kSchemaVersion = 1;

using electrolysis::PerRegion;
using electrolysis::Region;
using electrolysis::StackTechnology;

struct HydrogenSettings {
  double specific_energy_kwh_per_kg = 55.0;
  FinancialAssumptions financial{0.08, 20, 0.02};
  double subsidy_usd_per_kg = 3.0;
  /// Stack technology used for each region's LCOH grids and e-kerosene feed.
  PerRegion<StackTechnology> reference_technology{
      StackTechnology::WesternPem, StackTechnology::WesternPem,
      StackTechnology::ChineseAlkaline, StackTechnology::WesternAlkaline};
  std::vector<double> utilization_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> electricity_price_grid_usd_per_kwh{0.0,  0.01, 0.02, 0.03, 0.04, 0.05,
                                                         0.06, 0.07, 0.08, 0.09, 0.10};
  std::vector<double> target_lcoh_usd_per_kg{1.0, 2.0};
  /// Rendered comparison band for fossil hydrogen; not used in any model.
  Bounds fossil_reference_usd_per_kg{0.5, 2.5};
};

struct DacSettings {
  double current_cost_usd_per_tpy = 2600.0;
  double current_capacity_tpy = 2.05e6;
  double learning_rate = 0.14;
  double pipeline_addition_tpy = 3.5e6;
  FinancialAssumptions financial{0.10, 20, 0.046};
  double capacity_factor = 0.9;
  double non_learning_opex_usd_per_t = 10.78;
  double gas_intensity_gj_per_t = 9.5;
  double methane_mass_per_energy_t_per_gj = 0.019;
  dac::GwpValues gwp{};
  Bounds leakage{0.002, 0.037};
  dac::GwpHorizon horizon = dac::GwpHorizon::Gwp100;
  Bounds learning_rate_range{0.0818, 0.265};
  Bounds pipeline_scale{1.0, 1.0};
  std::vector<double> sweep_targets_usd_per_t{450, 425, 400, 375, 350, 325, 300, 275,
                                              250, 225, 200, 175, 150, 125, 100};
  /// Learning rates swept in addition to the base one.
  std::vector<double> sweep_learning_rates{0.20};

  dac::DacCostModel model() const { return model(learning_rate); }
  dac::DacCostModel model(double learning_rate) const;
  double horizon_capacity_tpy(double pipeline_scale = 1.0) const {
    return current_capacity_tpy + pipeline_scale * pipeline_addition_tpy;
  }
  dac::LeakageSpec leakage_spec(double rate) const { return dac::make_leakage(rate, horizon, gwp); }
};

struct FlightSettings {
  double distance_km = 5570.0;
  Bounds fuel_burn_l_per_pkm{0.028, 0.036};
  double blend = 0.05;
  Bounds fossil_price_usd_per_gal{1.0, 3.25};
};

struct EkeroseneSettings {
  double stoich_h2_kg_per_kg = 0.43;
  double stoich_co2_kg_per_kg = 3.12;
  double conversion_multiplier = 1.1;
  double synthesis_levelized_usd_per_kg = 0.55;
  double synthesis_electricity_kwh_per_kg = 0.8;
  /// Applies to both electrolysis and synthesis.
  double electricity_price_usd_per_kwh = 0.05;
  double fuel_density_kg_per_l = 0.80;
  double subsidy_usd_per_gal = 7.9;
  double hydrogen_utilization = 0.7;
  std::vector<double> h2_cost_grid_usd_per_kg{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> co2_cost_grid_usd_per_t{100, 200, 300, 400, 500, 600};
  FlightSettings flight{};

  /// Unsubsidized per-kg-fuel assumptions.
  ekerosene::EkAssumptions assumptions() const;
};

struct Scenario {
  int schema_version = kSchemaVersion;
  std::string name = "base-2030";
  std::string description = "Calibrated base case: current policy-driven deployment to 2030";
  int base_year = 2023;
  int horizon_year = 2030;
  electrolysis::ElectrolyzerConfig electrolysis = default_electrolyzer_config();
  electrolysis::ElectrolysisSensitivity electrolysis_sensitivity =
      default_electrolysis_sensitivity();
  HydrogenSettings hydrogen{};
  DacSettings dac{};
  EkeroseneSettings ekerosene{};

  static electrolysis::ElectrolyzerConfig default_electrolyzer_config();
  static electrolysis::ElectrolysisSensitivity default_electrolysis_sensitivity();
};

// ---------------------------------------------------------------------------
// Errors

/// Malformed document text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string origin, int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct FieldIssue {
  std::string field;  // dotted path, e.g. "dac.capital.learning_rate"
  std::string message;
};

/// Well-formed document that violates the schema or a model invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<FieldIssue> issues);
  const std::vector<FieldIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<FieldIssue> issues_;
};

/// Scenario file missing or unreadable.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Loading and echo

/// Parses YAML (JSON is accepted as a YAML subset) into a JSON tree.
nlohmann::json parse_document(std::string_view text, std::string_view origin = "<text>");

/// Builds and validates a scenario from a document; absent keys keep their
/// defaults, unknown keys are rejected.
Scenario from_json(const nlohmann::json& doc);

Scenario load_scenario_text(std::string_view text, std::string_view origin = "<text>");
Scenario load_scenario_file(const std::filesystem::path& path);

/// Effective configuration: every value the engine uses, defaults included.
nlohmann::json to_json(const Scenario& s);

/// Runs every cross-field check; throws ValidationError listing all issues.
void validate(const Scenario& s);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;
  std::string description;
  bool bundled = true;
};

/// Scenarios compiled into the library, by name.
std::vector<CatalogEntry> bundled_scenarios();
/// Raw text of a bundled scenario, or empty if there is none by that name.
std::string_view bundled_scenario_text(std::string_view name);

/// Bundled scenarios followed by `*.yaml`/`*.yml`/`*.json` files in
/// `custom_dir` (if it exists), sorted by name within each group.
std::vector<CatalogEntry> list_scenarios(const std::filesystem::path& custom_dir);

/// Resolves `name_or_path`: an existing file path, then a custom-dir file
/// `<name>.yaml`, then a bundled scenario. Throws IoError if none match.
Scenario resolve_scenario(std::string_view name_or_path, const std::filesystem::path& custom_dir);

/// Looks `name` up in the custom directory, then among bundled scenarios.
/// Never treats `name` as a path; empty when there is no such scenario.
std::optional<nlohmann::json> catalog_document(std::string_view name,
                                               const std::filesystem::path& custom_dir);

/// Same resolution, returning the unvalidated document (for applying overrides).
nlohmann::json resolve_document(std::string_view name_or_path,
                                const std::filesystem::path& custom_dir);

/// Custom scenario directory from EXPCURVE_SCENARIO_DIR, or empty.
std::filesystem::path custom_scenario_dir_from_env();

}  // namespace expcurve::scenario
