#pragma once

#include <span>
#include <string_view>

namespace expcurve::scenario::detail {

struct BundledText {
  std::string_view name;
  std::string_view text;
};

/// Scenario files compiled in from scenarios/ at configure time.
std::span<const BundledText> bundled_texts();

}  // namespace expcurve::scenario::detail
