#pragma once

// Independent numeric oracles. They only call the forward cost function, so
// they check the closed forms without sharing their algebra.

#include <cmath>
#include <cstddef>
#include <functional>

namespace expcurve::oracle {

/// Root of a monotone function on [lo, hi] by plain bisection.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Composite trapezoid rule with `panels` equal panels.
inline double trapezoid(const std::function<double(double)>& f, double a, double b,
                        std::size_t panels = 1'000'000) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.5 * (f(a) + f(b));
  for (std::size_t i = 1; i < panels; ++i) sum += f(a + h * static_cast<double>(i));
  return sum * h;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace expcurve::oracle
