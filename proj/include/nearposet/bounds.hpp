#pragma once

#include <cstddef>
#include <string_view>

namespace nearposet {

// Size limits for exhaustive enumeration.
struct Bounds {
  std::size_t powerset = 20;     // scans over P(P)
  std::size_t double_set = 14;   // scans whose cost is quadratic in |P(P)|
  std::size_t replacement = 8;   // the directed replacement on F(P)

  // Throws BoundExceeded when n > limit.
  static void require(std::size_t n, std::size_t limit, std::string_view what);
};

// Defaults, with NEARNESS_MAX_ELEMS overriding the powerset limit.
// The double-powerset limit is clamped to it. Read once.
const Bounds& default_bounds();

Bounds bounds_from_env(const char* value);

}  // namespace nearposet
