#include "nearposet/admissibility.hpp"

#include <algorithm>
#include <optional>

#include "nearposet/proximity.hpp"

namespace nearposet {

namespace {

// Counterexample to the Wallman-style condition, or nullopt when it holds.
// Order cover mode replaces "∈ Θ" by "is a ≤-cover".
std::optional<Counterexample> substitution_failure(const NearnessInstance& n, bool order_covers,
                                                   const char* name) {
  const Poset& p = n.poset();
  auto member = [&](Mask c) { return order_covers ? is_order_cover(p, c) : n.contains(c); };
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      std::optional<Mask> failing;
      n.for_each_member([&](Mask c) {
        if (!member((c & ~bit(a)) | bit(b))) failing = c;
        return !failing;
      });
      const bool rhs = !failing;
      if (p.leq(a, b) && !rhs) {
        return Counterexample{name, p.name(a) + " <= " + p.name(b) + " but C=" + p.format(*failing) +
                                        " gives " + p.format((*failing & ~bit(a)) | bit(b))};
      }
      if (!p.leq(a, b) && rhs) {
        return Counterexample{name, p.name(a) + " </= " + p.name(b) +
                                        " yet every substitution stays in the family"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> admissible_failure(const NearnessInstance& n, const BelowRelation& r,
                                                 EmptyJoinReading reading) {
  const Poset& p = n.poset();
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (r.below[x] == 0 && reading == EmptyJoinReading::vacuous) continue;
    auto j = p.join(r.below[x]);
    if (!j || *j != x) {
      return Counterexample{"admissible", p.name(x) + " is not the join of " + p.format(r.below[x])};
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> faithful_failure(const NearnessInstance& n, OrderFamily family,
                                               const char* name) {
  const Poset& p = n.poset();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) != leq_theta(n, a, b, family)) {
        return Counterexample{name, p.name(a) + (p.leq(a, b) ? " <= " : " </= ") + p.name(b) +
                                        " disagrees with the family order"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_order_cover(const Poset& p, Mask c) {
  const Mask below_c = p.down_closure(c);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b) && (p.down(a) & below_c & ~p.down(b)) == 0) return false;
    }
  }
  return true;
}

bool is_order_cover(const Poset& p, const ElementSet& c) {
  c.check_owner(p);
  return is_order_cover(p, c.bits());
}

bool is_wallman_admissible(const NearnessInstance& n) {
  return !substitution_failure(n, false, "wallman");
}

bool is_picado_pultr_admissible(const NearnessInstance& n) {
  return !substitution_failure(n, true, "picado-pultr");
}

bool is_admissible(const NearnessInstance& n, EmptyJoinReading reading) {
  return !admissible_failure(n, below_relations(n), reading);
}

AdmissibilityReport admissibility_report(const NearnessInstance& n) {
  AdmissibilityReport r;
  const Poset& p = n.poset();
  auto note = [&](const std::optional<Counterexample>& c) {
    if (c) r.counterexamples.push_back(*c);
    return !c;
  };
  r.weakly_admissible = is_weakly_admissible(n);
  if (!r.weakly_admissible) {
    const Mask dot = n.near_table().dotted;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p.up(x) != p.all() && !((dot >> x) & 1U)) {
        r.counterexamples.push_back({"weakly-admissible", "{" + p.name(x) + "} is not near"});
        break;
      }
    }
  }
  r.wallman = note(substitution_failure(n, false, "wallman"));
  r.picado_pultr = note(substitution_failure(n, true, "picado-pultr"));
  const BelowRelation below = below_relations(n);
  r.admissible = note(admissible_failure(n, below, EmptyJoinReading::literal));
  r.admissible_vacuous = !admissible_failure(n, below, EmptyJoinReading::vacuous);
  // Generators decide: anything refined by a ≤-cover is a ≤-cover.
  r.theta_in_order_covers = true;
  for (Mask c : n.generators()) {
    if (!is_order_cover(p, c)) {
      r.theta_in_order_covers = false;
      r.counterexamples.push_back({"order-covers", p.format(c) + " is not a ≤-cover"});
      break;
    }
  }
  r.leq_equals_leq_theta = note(faithful_failure(n, OrderFamily::theta, "faithful"));
  r.leq_equals_leq_theta_le = note(faithful_failure(n, OrderFamily::theta_le, "faithful-refined"));
  return r;
}

WallmanForms wallman_equivalent_forms(const NearnessInstance& n) {
  WallmanForms f;
  f.wallman = is_wallman_admissible(n);
  const bool faithful = !faithful_failure(n, OrderFamily::theta, "faithful");
  f.subset_closed_faithful = faithful && is_theta_subset_closed(n);
  f.refinement_closed_faithful = faithful && is_theta_upset(n);
  return f;
}

}  // namespace nearposet
