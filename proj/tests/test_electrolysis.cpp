#include <random>

#include <gtest/gtest.h>

#include "expcurve/electrolysis.hpp"
#include "expcurve/error.hpp"
#include "expcurve/scenario.hpp"

namespace {

using namespace expcurve;
using namespace expcurve::electrolysis;

ElectrolyzerCostModel synthetic() {
  // Each stack tech goes 1 -> 4 kW (two doublings), each region 2 -> 4 kW (one).
  PerTech<curves::LearningCurve> stacks = {
      curves::LearningCurve(1000, 1, 0.2), curves::LearningCurve(800, 1, 0.2),
      curves::LearningCurve(600, 1, 0.2), curves::LearningCurve(400, 1, 0.2)};
  auto bop = [](double base) {
    return PerTech<curves::LearningCurve>{
        curves::LearningCurve(base, 2, 0.1), curves::LearningCurve(base + 10, 2, 0.1),
        curves::LearningCurve(base + 20, 2, 0.1), curves::LearningCurve(base + 30, 2, 0.1)};
  };
  return {stacks, {bop(500), bop(600), bop(700), bop(800)}, {0.25, 0.25, 0.25, 0.25},
          {4, 4, 4, 4}, 16};
}

TEST(Electrolysis, SyntheticTwoPowerLaws) {
  const auto m = synthetic();
  m.validate();
  for (auto t : kAllTechnologies) EXPECT_DOUBLE_EQ(stack_capacity_at_horizon(m, t), 4.0);
  for (auto r : kAllRegions) {
    for (auto t : kAllTechnologies) {
      const auto now = current_capital_cost(m, r, t);
      const auto p = project_capital_cost(m, r, t);
      EXPECT_NEAR(p.stack, now.stack * 0.64, 1e-9);
      EXPECT_NEAR(p.bop_epc, now.bop_epc * 0.90, 1e-9);
      EXPECT_DOUBLE_EQ(p.total, p.stack + p.bop_epc);
    }
  }
}

TEST(Electrolysis, AllocationRule) {
  auto m = synthetic();
  m.market_shares = {0.1, 0.2, 0.3, 0.4};
  for (auto t : kAllTechnologies)
    EXPECT_DOUBLE_EQ(stack_capacity_at_horizon(m, t), 1 + m.market_shares[index(t)] * 12);
}

TEST(Electrolysis, ValidateRejectsBadShares) {
  auto m = synthetic();
  m.market_shares = {0.4, 0.4, 0.2, 0.2};
  EXPECT_THROW(m.validate(), ModelError);
  m = synthetic();
  m.regional_deployment[0] = 5;
  EXPECT_THROW(m.validate(), ModelError);
}

TEST(Electrolysis, NegativeGrowthRejected) {
  auto m = synthetic();
  m.global_deployment = 3;
  m.regional_deployment = {0.75, 0.75, 0.75, 0.75};
  try {
    stack_capacity_at_horizon(m, StackTechnology::WesternPem);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeGrowth);
  }
}

ElectrolyzerConfig zero_growth(ElectrolyzerConfig c) {
  for (auto& r : c.regions) r.horizon_capacity_kw = r.current_capacity_kw;
  double regional = 0, stacks = 0;
  for (const auto& r : c.regions) regional += r.current_capacity_kw;
  for (const auto& s : c.stacks) stacks += s.current_capacity_kw;
  EXPECT_NEAR(regional, stacks, 1e-6);
  return c;
}

TEST(Electrolysis, ZeroGrowthKeepsCurrentCost) {
  const auto m = build_model(zero_growth(scenario::Scenario::default_electrolyzer_config()));
  for (auto r : kAllRegions)
    for (auto t : kAllTechnologies) {
      EXPECT_EQ(project_capital_cost(m, r, t), current_capital_cost(m, r, t));
      EXPECT_EQ(decline_fraction(m, r, t), 0.0);
    }
}

TEST(Electrolysis, BopDependsOnlyOnOwnRegion) {
  const auto base = scenario::Scenario::default_electrolyzer_config();
  auto changed = base;
  changed.regions[index(Region::Eu)].horizon_capacity_kw *= 1.5;
  changed.regions[index(Region::Usa)].horizon_capacity_kw -=
      0.5 * base.regions[index(Region::Eu)].horizon_capacity_kw;
  const auto a = build_model(base), b = build_model(changed);
  for (auto t : kAllTechnologies) {
    // Global total is unchanged, so stacks match; China's BoP must not move.
    EXPECT_DOUBLE_EQ(project_capital_cost(a, Region::China, t).bop_epc,
                     project_capital_cost(b, Region::China, t).bop_epc);
    EXPECT_DOUBLE_EQ(project_capital_cost(a, Region::China, t).stack,
                     project_capital_cost(b, Region::China, t).stack);
    EXPECT_LT(project_capital_cost(b, Region::Eu, t).bop_epc,
              project_capital_cost(a, Region::Eu, t).bop_epc);
  }
}

TEST(Electrolysis, StacksCoupledThroughGlobalDeployment) {
  const auto base = scenario::Scenario::default_electrolyzer_config();
  auto more = base;
  more.regions[index(Region::China)].horizon_capacity_kw *= 2;
  const auto a = build_model(base), b = build_model(more);
  for (auto t : kAllTechnologies) {
    EXPECT_LT(project_capital_cost(b, Region::Usa, t).stack,
              project_capital_cost(a, Region::Usa, t).stack);
    EXPECT_DOUBLE_EQ(project_capital_cost(b, Region::Usa, t).bop_epc,
                     project_capital_cost(a, Region::Usa, t).bop_epc);
  }
}

TEST(Electrolysis, DegenerateEnvelopeCollapses) {
  const auto cfg = scenario::Scenario::default_electrolyzer_config();
  ElectrolysisSensitivity sens;
  sens.stack_learning_rate = {cfg.stack_learning_rate, cfg.stack_learning_rate};
  for (auto r : kAllRegions) {
    const double a = cfg.regions[index(r)].bop_epc_learning_rate;
    sens.bop_epc_learning_rate[index(r)] = {a, a};
  }
  const auto m = build_model(cfg);
  for (auto r : kAllRegions)
    for (auto t : kAllTechnologies) {
      const auto e = envelope(cfg, sens, r, t);
      EXPECT_EQ(e.lo, e.mid);
      EXPECT_EQ(e.mid, e.hi);
      EXPECT_EQ(e.mid, project_capital_cost(m, r, t).total);
    }
}

TEST(Electrolysis, InvertedBoundsRejected) {
  const auto cfg = scenario::Scenario::default_electrolyzer_config();
  auto sens = scenario::Scenario::default_electrolysis_sensitivity();
  sens.growth_scale = {1.2, 0.8};
  try {
    envelope(cfg, sens, Region::Usa, StackTechnology::WesternPem);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRange);
  }
}

TEST(Electrolysis, EnvelopeOrderedAndWidensWithLearningRange) {
  const auto cfg = scenario::Scenario::default_electrolyzer_config();
  const auto sens = scenario::Scenario::default_electrolysis_sensitivity();
  auto wider = sens;
  wider.stack_learning_rate.lo -= 0.03;
  wider.stack_learning_rate.hi += 0.03;
  for (auto r : kAllRegions)
    for (auto t : kAllTechnologies) {
      const auto e = envelope(cfg, sens, r, t);
      const auto w = envelope(cfg, wider, r, t);
      EXPECT_TRUE(e.ordered());
      EXPECT_LE(w.lo, e.lo);
      EXPECT_GE(w.hi, e.hi);
    }
}

// The corner shortcut is checked against random interior points of the box.
TEST(Electrolysis, EnvelopeContainsRandomBoxPoints) {
  const auto cfg = scenario::Scenario::default_electrolyzer_config();
  const auto sens = scenario::Scenario::default_electrolysis_sensitivity();
  std::mt19937_64 rng(7);
  auto pick = [&](const Bounds& b) { return std::uniform_real_distribution<double>(b.lo, b.hi)(rng); };
  for (int i = 0; i < 200; ++i) {
    ParameterPoint p;
    p.stack_learning_rate = pick(sens.stack_learning_rate);
    for (auto r : kAllRegions) p.bop_epc_learning_rate[index(r)] = pick(sens.bop_epc_learning_rate[index(r)]);
    p.growth_scale = pick(sens.growth_scale);
    const auto m = build_model(cfg, p);
    for (auto r : kAllRegions)
      for (auto t : kAllTechnologies) {
        const auto e = envelope(cfg, sens, r, t);
        const double v = project_capital_cost(m, r, t).total;
        EXPECT_GE(v, e.lo * (1 - 1e-12));
        EXPECT_LE(v, e.hi * (1 + 1e-12));
      }
  }
}

TEST(Electrolysis, BaseDeclineWithinUnitInterval) {
  const auto m = build_model(scenario::Scenario::default_electrolyzer_config());
  for (auto r : kAllRegions)
    for (auto t : kAllTechnologies) {
      const double d = decline_fraction(m, r, t);
      EXPECT_GE(d, 0.0);
      EXPECT_LT(d, 1.0);
    }
}

TEST(Electrolysis, Keys) {
  EXPECT_EQ(key(StackTechnology::WesternPem), "western_pem");
  EXPECT_EQ(key(Region::Row), "row");
  for (auto t : kAllTechnologies) EXPECT_EQ(parse_technology(key(t)), t);
  for (auto r : kAllRegions) EXPECT_EQ(parse_region(key(r)), r);
  EXPECT_FALSE(parse_region("mars"));
}

}  // namespace
