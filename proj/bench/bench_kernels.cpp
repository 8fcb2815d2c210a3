// Serial reference kernels against their OpenMP counterparts. Arg(0) is the
// serial path, Arg(1) the parallel one.

#include <vector>

#include <benchmark/benchmark.h>

#include "expcurve/kernels.hpp"
#include "expcurve/scenario.hpp"

namespace {

using namespace expcurve;

kernels::Execution exec(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Execution::Serial : kernels::Execution::Parallel;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

void BM_LcohGrid(benchmark::State& state) {
  hydrogen::HydrogenPlantAssumptions plant;
  plant.capex_usd_per_kw = 1600;
  const auto us = linspace(0.01, 1, 500), ps = linspace(0, 0.15, 500);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lcoh_grid(plant, us, ps, exec(state)));
  state.SetItemsProcessed(state.iterations() * us.size() * ps.size());
}

void BM_LcoekSurface(benchmark::State& state) {
  const ekerosene::EkAssumptions ek;
  const auto h = linspace(0.5, 10, 500), c = linspace(50, 800, 500);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lcoek_surface(ek, h, c, exec(state)));
  state.SetItemsProcessed(state.iterations() * h.size() * c.size());
}

void BM_DacSweep(benchmark::State& state) {
  const scenario::DacSettings d;
  const auto m = d.model(0.2);
  const auto lo = d.leakage_spec(0.002), hi = d.leakage_spec(0.037);
  const auto targets = linspace(600, 50, 20000);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::target_sweep(m, lo, hi, targets, exec(state)));
  state.SetItemsProcessed(state.iterations() * targets.size() * 2);
}

BENCHMARK(BM_LcohGrid)->Arg(0)->Arg(1);
BENCHMARK(BM_LcoekSurface)->Arg(0)->Arg(1);
BENCHMARK(BM_DacSweep)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
