#include "expcurve/finance.hpp"

#include <cmath>

#include <fmt/format.h>

#include "expcurve/error.hpp"

namespace expcurve {

void FinancialAssumptions::validate() const {
  if (!(discount_rate >= 0.0) || !std::isfinite(discount_rate)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("discount rate must be >= 0, got {}", discount_rate));
  }
  if (lifetime_years < 1) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("lifetime must be at least one year, got {}", lifetime_years));
  }
  if (!(fixed_om_fraction >= 0.0) || !std::isfinite(fixed_om_fraction)) {
    throw ModelError(ErrorCode::InvalidArgument,
                     fmt::format("fixed O&M fraction must be >= 0, got {}", fixed_om_fraction));
  }
}

double FinancialAssumptions::capital_recovery_factor() const {
  validate();
  const double n = lifetime_years;
  if (discount_rate == 0.0) return 1.0 / n;
  // expm1 keeps (1+r)^n - 1 accurate for small r.
  const double growth_minus_one = std::expm1(n * std::log1p(discount_rate));
  return discount_rate * (growth_minus_one + 1.0) / growth_minus_one;
}

}  // namespace expcurve
