#pragma once

#include <algorithm>

namespace expcurve {

/// Closed parameter interval used for sensitivity inputs. The central value
/// lives on the model itself, so lo <= base <= hi is checked where both meet.
struct Bounds {
  double lo = 0.0;
  double hi = 0.0;

  bool ordered() const noexcept { return lo <= hi; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  bool degenerate() const noexcept { return lo == hi; }

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// (lo, mid, hi) envelope of a projected quantity, all in the quantity's unit.
struct ProjectionRange {
  double lo = 0.0;
  double mid = 0.0;
  double hi = 0.0;

  bool ordered() const noexcept { return lo <= mid && mid <= hi; }

  friend bool operator==(const ProjectionRange&, const ProjectionRange&) = default;
};

}  // namespace expcurve
