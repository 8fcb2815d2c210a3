#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "expcurve/export.hpp"
#include "expcurve/scenario.hpp"
#include "test_paths.hpp"

namespace {

using namespace expcurve;
using nlohmann::json;

bool has_issue(const scenario::ValidationError& e, std::string_view field) {
  for (const auto& i : e.issues())
    if (i.field == field) return true;
  return false;
}

scenario::ValidationError validation_error(std::string_view text) {
  try {
    scenario::load_scenario_text(text);
  } catch (const scenario::ValidationError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ValidationError for:\n" << text;
  return scenario::ValidationError({});
}

TEST(Scenario, BundledBaseLoadsWithEvenSplit) {
  const auto s = scenario::resolve_scenario("base-2030", {});
  const auto echo = scenario::to_json(s);
  EXPECT_EQ(echo["electrolysis"]["market_split"]["pem_western_fraction"], 0.5);
  EXPECT_EQ(echo["electrolysis"]["market_split"]["alkaline_western_fraction"], 0.5);
  const auto shares = s.electrolysis.split.shares();
  EXPECT_DOUBLE_EQ(shares[0], shares[1]);
  EXPECT_DOUBLE_EQ(shares[2], shares[3]);
}

TEST(Scenario, BundledBaseSpellsOutEveryDefault) {
  const auto file = scenario::to_json(scenario::resolve_scenario("base-2030", {}));
  EXPECT_EQ(file, scenario::to_json(scenario::Scenario{}));
}

TEST(Scenario, MinimalFileEchoesDocumentedDefaults) {
  const auto s = scenario::load_scenario_text("schema_version: 1\nname: base-2030\n");
  const auto echo = io::dump(scenario::to_json(s));
  const auto path = test_data_dir() / "golden" / "defaults_echo.json";
  if (std::getenv("EXPCURVE_UPDATE_GOLDEN") != nullptr) std::ofstream(path) << echo;
  EXPECT_EQ(echo, read_text(path));
}

TEST(Scenario, SharesSummingAboveOneRejected) {
  const auto e = validation_error(R"(schema_version: 1
name: bad
electrolysis:
  market_split: {pem_fraction: 1.2}
)");
  EXPECT_TRUE(has_issue(e, "electrolysis.market_split.pem_fraction"));
}

TEST(Scenario, StackCapacityMustMatchRegionalTotal) {
  const auto e = validation_error(R"(schema_version: 1
name: bad
electrolysis:
  stacks:
    western_pem: {current_capacity_kw: 5000000}
)");
  EXPECT_TRUE(has_issue(e, "electrolysis.regions"));
}

TEST(Scenario, UnknownKeyNamed) {
  const auto e = validation_error("schema_version: 1\nname: x\ndac:\n  learnin_rate: 0.2\n");
  EXPECT_TRUE(has_issue(e, "dac.learnin_rate"));
}

TEST(Scenario, WrongTypeNamed) {
  const auto e = validation_error("schema_version: 1\nname: x\ndac:\n  capacity_factor: high\n");
  EXPECT_TRUE(has_issue(e, "dac.capacity_factor"));
}

TEST(Scenario, RequiredKeys) {
  const auto e = validation_error("description: nothing else\n");
  EXPECT_TRUE(has_issue(e, "schema_version"));
  EXPECT_TRUE(has_issue(e, "name"));
}

TEST(Scenario, AllIssuesReportedTogether) {
  const auto e = validation_error(R"(schema_version: 1
name: x
dac:
  capital: {learning_rate: 1.5}
  capacity_factor: 0
ekerosene:
  flight: {blend: 2}
)");
  EXPECT_TRUE(has_issue(e, "dac.capital.learning_rate"));
  EXPECT_TRUE(has_issue(e, "dac.capacity_factor"));
  EXPECT_TRUE(has_issue(e, "ekerosene.flight.blend"));
}

TEST(Scenario, ParseErrorCarriesPosition) {
  try {
    scenario::load_scenario_text("schema_version: 1\nname: x\ndac: [1, 2\n");
    FAIL();
  } catch (const scenario::ParseError& e) {
    EXPECT_GE(e.line(), 3);
    EXPECT_GE(e.column(), 1);
  }
}

TEST(Scenario, DuplicateKeyIsParseError) {
  try {
    scenario::load_scenario_text("schema_version: 1\nname: x\nname: y\n");
    FAIL();
  } catch (const scenario::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 1);
  }
}

TEST(Scenario, JsonAcceptedAsYaml) {
  const auto s = scenario::load_scenario_text(R"({"schema_version": 1, "name": "j",
    "dac": {"capital": {"learning_rate": 0.2}, "sensitivity": {"learning_rate": {"lo": 0.1, "hi": 0.3}}}})");
  EXPECT_EQ(s.dac.learning_rate, 0.2);
  EXPECT_EQ(s.name, "j");
}

TEST(Scenario, EchoRoundTrips) {
  for (const auto& entry : scenario::bundled_scenarios()) {
    const auto s = scenario::resolve_scenario(entry.name, {});
    const auto echo = scenario::to_json(s);
    EXPECT_EQ(scenario::to_json(scenario::from_json(echo)), echo) << entry.name;
  }
}

TEST(Scenario, MissingFileIsIoError) {
  EXPECT_THROW(scenario::resolve_scenario("/no/such/file.yaml", {}), scenario::IoError);
  EXPECT_THROW(scenario::resolve_scenario("no-such-scenario", {}), scenario::IoError);
}

TEST(Scenario, CatalogNeverReadsPaths) {
  EXPECT_FALSE(scenario::catalog_document("../scenarios/base-2030", {}));
  EXPECT_FALSE(scenario::catalog_document("/etc/passwd", {}));
  EXPECT_TRUE(scenario::catalog_document("base-2030", {}));
}

TEST(Scenario, CustomDirectoryListedAfterBundled) {
  const auto dir = std::filesystem::temp_directory_path() / "expcurve_custom_scenarios";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "my-case.yaml")
      << "schema_version: 1\nname: my-case\ndescription: mine\ndac:\n  capacity_factor: 0.8\n";
  const auto list = scenario::list_scenarios(dir);
  ASSERT_EQ(list.size(), scenario::bundled_scenarios().size() + 1);
  EXPECT_EQ(list.back().name, "my-case");
  EXPECT_FALSE(list.back().bundled);
  EXPECT_EQ(scenario::resolve_scenario("my-case", dir).dac.capacity_factor, 0.8);
  EXPECT_EQ(scenario::list_scenarios(dir / "absent").size(), scenario::bundled_scenarios().size());
  std::filesystem::remove_all(dir);
}

}  // namespace
