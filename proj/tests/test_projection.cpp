#include <filesystem>
#include <fstream>
#include <functional>

#include <gtest/gtest.h>

#include "expcurve/export.hpp"
#include "expcurve/projection.hpp"
#include "expcurve/scenario.hpp"
#include "test_paths.hpp"

namespace {

using namespace expcurve;
using nlohmann::json;

scenario::Scenario bundled(std::string_view name) { return scenario::resolve_scenario(name, {}); }

// Visits every {lo, mid, hi} object in an exported document.
void for_each_range(const json& j, const std::function<void(const json&)>& f) {
  if (j.is_object()) {
    if (j.contains("lo") && j.contains("mid") && j.contains("hi")) f(j);
    for (const auto& [k, v] : j.items()) for_each_range(v, f);
  } else if (j.is_array()) {
    for (const auto& v : j) for_each_range(v, f);
  }
}

TEST(Projection, ZeroGrowthKeepsCurrentValues) {
  const auto b = projection::run_full_projection(bundled("zero-growth"));
  ASSERT_TRUE(b.errors.empty());
  for (const auto& row : b.electrolysis->rows) {
    EXPECT_EQ(row.projected, row.current);
    EXPECT_EQ(row.decline_fraction, 0.0);
  }
  const auto& d = *b.dac;
  EXPECT_EQ(d.capacity_horizon_tpy, d.capacity_current_tpy);
  for (const auto& c : d.cases) EXPECT_EQ(c.capital_horizon_usd_per_tpy, d.capital_current_usd_per_tpy);
  for (const auto& r : b.ekerosene->regions) {
    EXPECT_NEAR(r.lcoek_projected_usd_per_gal, r.lcoek_current_usd_per_gal, 1e-12);
    EXPECT_NEAR(r.reduction_usd_per_gal, 0.0, 1e-12);
  }
  for (const auto& r : b.hydrogen->regions) EXPECT_EQ(r.capex_projected_usd_per_kw.mid, r.capex_current_usd_per_kw);
}

TEST(Projection, DegenerateBoundsCollapseEveryRange) {
  auto s = scenario::Scenario{};
  auto& sens = s.electrolysis_sensitivity;
  sens.stack_learning_rate = {s.electrolysis.stack_learning_rate, s.electrolysis.stack_learning_rate};
  for (std::size_t r = 0; r < sens.bop_epc_learning_rate.size(); ++r) {
    const double a = s.electrolysis.regions[r].bop_epc_learning_rate;
    sens.bop_epc_learning_rate[r] = {a, a};
  }
  sens.growth_scale = {1, 1};
  s.dac.learning_rate_range = {s.dac.learning_rate, s.dac.learning_rate};
  s.dac.leakage = {0.01, 0.01};
  scenario::validate(s);
  const auto doc = io::to_json(projection::run_full_projection(s));
  int seen = 0;
  for_each_range(doc["results"], [&](const json& r) {
    ++seen;
    EXPECT_EQ(r["lo"], r["mid"]) << r.dump();
    EXPECT_EQ(r["mid"], r["hi"]) << r.dump();
  });
  EXPECT_GT(seen, 16);
}

TEST(Projection, RangesOrdered) {
  const auto doc = io::to_json(projection::run_full_projection(scenario::Scenario{}));
  for_each_range(doc["results"], [](const json& r) {
    EXPECT_LE(r["lo"].get<double>(), r["mid"].get<double>()) << r.dump();
    EXPECT_LE(r["mid"].get<double>(), r["hi"].get<double>()) << r.dump();
  });
}

TEST(Projection, SectionsSelectable) {
  const std::vector<projection::Section> only{projection::Section::Dac};
  const auto b = projection::run_full_projection(scenario::Scenario{}, only);
  EXPECT_TRUE(b.dac);
  EXPECT_FALSE(b.electrolysis);
  EXPECT_FALSE(b.hydrogen);
  EXPECT_FALSE(b.ekerosene);
}

TEST(Projection, FailingSectionIsIsolated) {
  auto s = scenario::Scenario{};
  s.dac.capacity_factor = 0;  // bypasses validate() on purpose
  const auto b = projection::run_full_projection(s);
  EXPECT_TRUE(b.errors.count("dac"));
  EXPECT_FALSE(b.dac);
  EXPECT_TRUE(b.electrolysis);
  EXPECT_TRUE(b.hydrogen);
}

TEST(Projection, DeterministicAndExecutionIndependent) {
  const auto s = bundled("base-2030");
  const auto a = io::dump(io::to_json(projection::run_full_projection(s)));
  const auto b = io::dump(io::to_json(projection::run_full_projection(s)));
  const auto c = io::dump(io::to_json(
      projection::run_full_projection(s, {}, kernels::Execution::Serial)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  for (const auto& t : io::to_tables(projection::run_full_projection(s)))
    EXPECT_EQ(io::to_csv(t), io::to_csv(t));
}

TEST(Projection, FlightPremiumCornerRule) {
  scenario::FlightSettings f;
  const auto r = projection::flight_premium_range(f, {10, 12});
  const double gal_lo = 5570 * 0.028 / 3.78541, gal_hi = 5570 * 0.036 / 3.78541;
  EXPECT_NEAR(r.lo, 0.05 * (10 - 3.25) * gal_lo, 1e-12);
  EXPECT_NEAR(r.hi, 0.05 * (12 - 1.0) * gal_hi, 1e-12);
}

TEST(Export, JsonRoundTrip) {
  const auto b = projection::run_full_projection(scenario::Scenario{});
  const auto dir = std::filesystem::temp_directory_path() / "expcurve_export_json";
  const auto path = io::write_json(dir, b);
  EXPECT_EQ(io::read_json(path), io::to_json(b));
  std::filesystem::remove_all(dir);
}

TEST(Export, CsvHeadersCarryUnits) {
  const auto tables = io::to_tables(projection::run_full_projection(scenario::Scenario{}));
  bool found = false;
  for (const auto& t : tables) {
    for (const auto& h : t.header) found |= h.ends_with("total_usd_per_kw");
    for (const auto& row : t.rows) EXPECT_EQ(row.size(), t.header.size()) << t.name;
  }
  EXPECT_TRUE(found);
}

TEST(Export, CsvQuoting) {
  const io::Table t{"x", {"a", "b"}, {{"plain", "has,comma"}, {"say \"hi\"", "two\nlines"}}};
  EXPECT_EQ(io::to_csv(t), "a,b\nplain,\"has,comma\"\n\"say \"\"hi\"\"\",\"two\nlines\"\n");
}

TEST(Export, CsvFilesWritten) {
  const auto dir = std::filesystem::temp_directory_path() / "expcurve_export_csv";
  const auto files = io::write_csv(dir, projection::run_full_projection(scenario::Scenario{}));
  EXPECT_GE(files.size(), 10u);
  for (const auto& f : files) EXPECT_TRUE(std::filesystem::is_regular_file(f)) << f;
  std::filesystem::remove_all(dir);
}

TEST(Export, GoldenBaseCase) {
  const auto text = io::dump(io::to_json(projection::run_full_projection(bundled("base-2030"))));
  const auto path = test_data_dir() / "golden" / "base-2030.bundle.json";
  if (std::getenv("EXPCURVE_UPDATE_GOLDEN") != nullptr) std::ofstream(path) << text;
  EXPECT_EQ(text, read_text(path));
}

}  // namespace
