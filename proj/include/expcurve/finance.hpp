#pragma once

namespace expcurve {

/// Annualization inputs shared by the levelized-cost models.
struct FinancialAssumptions {
  double discount_rate = 0.08;     // 1/yr
  int lifetime_years = 20;
  double fixed_om_fraction = 0.02;  // of CAPEX per yr

  /// Throws ModelError(InvalidArgument) on a negative rate or O&M fraction or
  /// a lifetime below one year.
  void validate() const;

  /// r(1+r)^n / ((1+r)^n - 1), or 1/n at r = 0.
  double capital_recovery_factor() const;

  /// CRF plus fixed O&M: the yearly charge per unit of CAPEX.
  double annual_charge_rate() const { return capital_recovery_factor() + fixed_om_fraction; }

  friend bool operator==(const FinancialAssumptions&, const FinancialAssumptions&) = default;
};

}  // namespace expcurve
