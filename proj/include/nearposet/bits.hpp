#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace nearposet {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int popcount(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// Calls f on every submask of m, in increasing numeric order.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace nearposet
