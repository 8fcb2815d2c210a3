#include "expcurve/kernels.hpp"

#include <cstdint>
#include <exception>

namespace expcurve::kernels {

namespace {

// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel region
// are captured and the first one is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(expcurve_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <class Cell>
Grid fill_grid(std::span<const double> rows, std::span<const double> cols, Execution exec,
               Cell&& cell) {
  Grid g{{rows.begin(), rows.end()}, {cols.begin(), cols.end()}, {}};
  g.values.resize(rows.size() * cols.size());
  const std::size_t width = cols.size();
  for_each_index(g.values.size(), exec, [&](std::size_t k) {
    g.values[k] = cell(rows[k / width], cols[k % width]);
  });
  return g;
}

}  // namespace

Grid lcoh_grid(const hydrogen::HydrogenPlantAssumptions& plant,
               std::span<const double> utilizations, std::span<const double> prices,
               Execution exec) {
  plant.financial.validate();
  return fill_grid(utilizations, prices, exec, [&](double u, double p) {
    auto a = plant;
    a.utilization = u;
    a.electricity_price_usd_per_kwh = p;
    return hydrogen::lcoh(a);
  });
}

Grid required_price_grid(const hydrogen::HydrogenPlantAssumptions& plant,
                         std::span<const double> utilizations, std::span<const double> targets,
                         Execution exec) {
  return fill_grid(utilizations, targets, exec, [&](double u, double t) {
    auto a = plant;
    a.utilization = u;
    return hydrogen::required_electricity_price(a, t);
  });
}

Grid lcoek_surface(const ekerosene::EkAssumptions& ek, std::span<const double> h2_costs,
                   std::span<const double> co2_costs, Execution exec) {
  ek.validate();
  return fill_grid(h2_costs, co2_costs, exec,
                   [&](double h2, double co2) { return ekerosene::lcoek(ek, h2, co2); });
}

std::vector<dac::SweepRow> target_sweep(const dac::DacCostModel& model,
                                        const dac::LeakageSpec& leakage_lo,
                                        const dac::LeakageSpec& leakage_hi,
                                        std::span<const double> targets, Execution exec) {
  if (exec == Execution::Serial) return dac::target_sweep(model, leakage_lo, leakage_hi, targets);
  dac::validate_target_grid(targets);
  std::vector<dac::SweepRow> rows(targets.size());
  for_each_index(targets.size(), exec, [&](std::size_t i) {
    rows[i] = {targets[i], dac::evaluate_target(model, leakage_lo, targets[i]),
               dac::evaluate_target(model, leakage_hi, targets[i])};
  });
  return rows;
}

}  // namespace expcurve::kernels
