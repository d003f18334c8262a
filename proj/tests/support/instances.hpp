#pragma once

#include <string>
#include <vector>

#include "nearposet/frames.hpp"
#include "nearposet/nearness.hpp"
#include "nearposet/spaces.hpp"

namespace nearposet::testing {

using Order = std::vector<std::pair<std::string, std::string>>;

inline Poset antichain_ab() { return Poset({"a", "b"}, Order{}); }
inline Poset chain01() { return Poset({"0", "1"}, {{"0", "1"}}); }
inline Poset vee() { return Poset({"a", "b", "1"}, {{"a", "1"}, {"b", "1"}}); }
inline Poset boolean4() { return Poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}); }

inline Mask m(const Poset& p, const std::vector<std::string>& names) { return p.set(names).bits(); }

// Antichain {a,b} with Θ = {{a,b}}.
inline NearnessInstance i1() {
  Poset p = antichain_ab();
  return NearnessInstance(p, std::vector<Mask>{m(p, {"a", "b"})});
}

// Chain 0 < 1 with Θ = {{1}}.
inline NearnessInstance i2() {
  Poset p = chain01();
  return NearnessInstance(p, std::vector<Mask>{m(p, {"1"})});
}

// {a,b} < 1 with Θ = {{a,b}}.
inline NearnessInstance i3() {
  Poset p = vee();
  return NearnessInstance(p, std::vector<Mask>{m(p, {"a", "b"})});
}

// Three points covered by the three two-point sets.
inline FiniteSpace i5() {
  return FiniteSpace({"x", "y", "z"}, {{"xy", {"x", "y"}}, {"yz", {"y", "z"}}, {"xz", {"x", "z"}}},
                     FamilyRole::subbasis);
}

inline FiniteSpace discrete(std::size_t n) {
  std::vector<Mask> sets;
  for (std::size_t i = 0; i < n; ++i) sets.push_back(bit(i));
  return FiniteSpace(n, sets, FamilyRole::basis);
}

inline std::vector<Mask> masks(const std::vector<ElementSet>& v) {
  std::vector<Mask> out;
  for (const auto& e : v) out.push_back(e.bits());
  return out;
}

}  // namespace nearposet::testing
