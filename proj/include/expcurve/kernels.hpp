#pragma once

// Grid and sweep evaluators. Each has a serial reference path and an OpenMP
// path; both evaluate the same per-cell function, so their outputs are
// bitwise identical and the serial path doubles as the test oracle.

#include <cstddef>
#include <span>
#include <vector>

#include "expcurve/dac.hpp"
#include "expcurve/ekerosene.hpp"
#include "expcurve/hydrogen.hpp"

namespace expcurve::kernels {

enum class Execution { Serial, Parallel };

/// Row-major values over (row axis x column axis).
struct Grid {
  std::vector<double> rows;
  std::vector<double> cols;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols.size() + c]; }
};

/// LCOH over utilization (rows) x electricity price in USD/kWh (columns).
Grid lcoh_grid(const hydrogen::HydrogenPlantAssumptions& plant,
               std::span<const double> utilizations, std::span<const double> prices,
               Execution exec = Execution::Parallel);

/// Required electricity price over utilization (rows) x target LCOH (columns).
Grid required_price_grid(const hydrogen::HydrogenPlantAssumptions& plant,
                         std::span<const double> utilizations, std::span<const double> targets,
                         Execution exec = Execution::Parallel);

/// LCOek in USD/gal over H2 cost in USD/kg (rows) x CO2 cost in USD/t (columns).
Grid lcoek_surface(const ekerosene::EkAssumptions& ek, std::span<const double> h2_costs,
                   std::span<const double> co2_costs, Execution exec = Execution::Parallel);

std::vector<dac::SweepRow> target_sweep(const dac::DacCostModel& model,
                                        const dac::LeakageSpec& leakage_lo,
                                        const dac::LeakageSpec& leakage_hi,
                                        std::span<const double> targets,
                                        Execution exec = Execution::Parallel);

}  // namespace expcurve::kernels
