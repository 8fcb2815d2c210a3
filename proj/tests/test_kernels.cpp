#include <cstring>

#include <gtest/gtest.h>

#include "expcurve/kernels.hpp"
#include "expcurve/scenario.hpp"

namespace {

using namespace expcurve;
using kernels::Execution;

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

hydrogen::HydrogenPlantAssumptions plant() {
  hydrogen::HydrogenPlantAssumptions p;
  p.capex_usd_per_kw = 1800;
  p.subsidy_usd_per_kg = 3;
  return p;
}

TEST(Kernels, LcohGridSerialEqualsParallel) {
  const auto us = linspace(0.05, 1, 97), ps = linspace(0, 0.12, 61);
  const auto s = kernels::lcoh_grid(plant(), us, ps, Execution::Serial);
  const auto p = kernels::lcoh_grid(plant(), us, ps, Execution::Parallel);
  EXPECT_TRUE(bitwise_equal(s.values, p.values));
  ASSERT_EQ(s.values.size(), us.size() * ps.size());
  auto a = plant();
  a.utilization = us[13];
  a.electricity_price_usd_per_kwh = ps[7];
  EXPECT_EQ(s.at(13, 7), hydrogen::lcoh(a));
}

TEST(Kernels, RequiredPriceGridSerialEqualsParallel) {
  const auto us = linspace(0.05, 1, 50), ts = linspace(0.5, 4, 15);
  const auto s = kernels::required_price_grid(plant(), us, ts, Execution::Serial);
  const auto p = kernels::required_price_grid(plant(), us, ts, Execution::Parallel);
  EXPECT_TRUE(bitwise_equal(s.values, p.values));
  auto a = plant();
  a.utilization = us[4];
  EXPECT_EQ(s.at(4, 2), hydrogen::required_electricity_price(a, ts[2]));
}

TEST(Kernels, LcoekSurfaceSerialEqualsParallel) {
  const ekerosene::EkAssumptions ek;
  const auto h = linspace(1, 8, 71), c = linspace(100, 600, 51);
  const auto s = kernels::lcoek_surface(ek, h, c, Execution::Serial);
  const auto p = kernels::lcoek_surface(ek, h, c, Execution::Parallel);
  EXPECT_TRUE(bitwise_equal(s.values, p.values));
  EXPECT_EQ(s.at(9, 3), ekerosene::lcoek(ek, h[9], c[3]));
}

TEST(Kernels, DacSweepSerialEqualsParallelAndReference) {
  const scenario::DacSettings d;
  const auto m = d.model(0.2);
  const auto lo = d.leakage_spec(0.002), hi = d.leakage_spec(0.037);
  const auto targets = linspace(600, 20, 300);
  const auto s = kernels::target_sweep(m, lo, hi, targets, Execution::Serial);
  const auto p = kernels::target_sweep(m, lo, hi, targets, Execution::Parallel);
  const auto ref = dac::target_sweep(m, lo, hi, targets);
  ASSERT_EQ(s.size(), p.size());
  ASSERT_EQ(s.size(), ref.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto* other : {&p, &ref}) {
      const auto& o = (*other)[i];
      EXPECT_EQ(s[i].target_usd_per_t, o.target_usd_per_t);
      EXPECT_EQ(s[i].low_leakage.status, o.low_leakage.status);
      EXPECT_EQ(s[i].low_leakage.capacity_tpy, o.low_leakage.capacity_tpy);
      EXPECT_EQ(s[i].low_leakage.investment_usd, o.low_leakage.investment_usd);
      EXPECT_EQ(s[i].high_leakage.status, o.high_leakage.status);
      EXPECT_EQ(s[i].high_leakage.capacity_tpy, o.high_leakage.capacity_tpy);
      EXPECT_EQ(s[i].high_leakage.investment_usd, o.high_leakage.investment_usd);
    }
  }
}

TEST(Kernels, EmptyAxes) {
  const std::vector<double> none;
  const auto g = kernels::lcoh_grid(plant(), none, none);
  EXPECT_TRUE(g.values.empty());
}

}  // namespace
