#pragma once

#include <string>
#include <vector>

#include "nearposet/nearness.hpp"

namespace nearposet {

// C is a ≤-cover iff p ≰ q implies some r ≤ p lies below a member of C
// without being ≤ q.
bool is_order_cover(const Poset& p, Mask c);
bool is_order_cover(const Poset& p, const ElementSet& c);

// p ≤ q iff (C \ {p}) ∪ {q} ∈ Θ for every C in Θ.
bool is_wallman_admissible(const NearnessInstance& n);
// As above with ≤-covers in place of Θ on the right-hand side.
bool is_picado_pultr_admissible(const NearnessInstance& n);

enum class EmptyJoinReading {
  literal,   // p^▷ = ∅ requires p to be the least element
  vacuous,   // p^▷ = ∅ is accepted for every p
};

// p is the least upper bound of p^▷ for every p.
bool is_admissible(const NearnessInstance& n, EmptyJoinReading reading = EmptyJoinReading::literal);

struct Counterexample {
  std::string property;
  std::string detail;
};

struct AdmissibilityReport {
  bool weakly_admissible = false;
  bool wallman = false;
  bool picado_pultr = false;
  bool admissible = false;
  bool admissible_vacuous = false;  // the other reading of the empty join
  bool theta_in_order_covers = false;
  bool leq_equals_leq_theta = false;     // ≤ = ≤_Θ
  bool leq_equals_leq_theta_le = false;  // ≤ = ≤_{Θ^≤}
  std::vector<Counterexample> counterexamples;
};

AdmissibilityReport admissibility_report(const NearnessInstance& n);

// The three equivalent forms: Wallman admissible; ⊆-closed in F(P) with
// ≤ = ≤_Θ; ≤-closed in F(P) with ≤ = ≤_Θ.
struct WallmanForms {
  bool wallman = false;
  bool subset_closed_faithful = false;
  bool refinement_closed_faithful = false;
  bool agree() const {
    return wallman == subset_closed_faithful && subset_closed_faithful == refinement_closed_faithful;
  }
};

WallmanForms wallman_equivalent_forms(const NearnessInstance& n);

}  // namespace nearposet
