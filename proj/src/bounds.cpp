#include "nearposet/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nearposet/error.hpp"

namespace nearposet {

void Bounds::require(std::size_t n, std::size_t limit, std::string_view what) {
  if (n > limit) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(n) +
                        " elements exceeds the limit of " + std::to_string(limit));
  }
}

Bounds bounds_from_env(const char* value) {
  Bounds b;
  if (value == nullptr || *value == '\0') return b;
  char* end = nullptr;
  unsigned long v = std::strtoul(value, &end, 10);
  if (end == value || *end != '\0') return b;
  // Tables indexed by subsets of P must stay addressable.
  v = std::min<unsigned long>(v, 30);
  b.powerset = v;
  b.double_set = std::min<std::size_t>(b.double_set, v);
  b.replacement = std::min<std::size_t>(b.replacement, v);
  return b;
}

const Bounds& default_bounds() {
  static const Bounds b = bounds_from_env(std::getenv("NEARNESS_MAX_ELEMS"));
  return b;
}

}  // namespace nearposet
