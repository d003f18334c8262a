#pragma once

#include <optional>
#include <vector>

#include "nearposet/nearness.hpp"

namespace nearposet {

// Nearness is always taken with respect to Θ^≤.
struct NearResult {
  bool near = false;
  std::optional<ElementSet> witness;  // a down-set D ∉ Θ^≤ with D ∪ {s} ∈ Θ^≤ for s in S
};

NearResult is_near(const NearnessInstance& n, const ElementSet& s);
// Unrestricted witness search over every D ⊆ P.
NearResult is_near_oracle(const NearnessInstance& n, const ElementSet& s);

// Ṗ: elements p with {p} near.
ElementSet dotted(const NearnessInstance& n);
bool is_weakly_admissible(const NearnessInstance& n);

// Cp = {c in C : {c, p} near}.
ElementSet star(const NearnessInstance& n, const ElementSet& c, std::size_t p);
Mask star_mask(const NearnessInstance& n, Mask c, std::size_t p);
// Θp = {Cp : C in Θ}, taken over the generators.
std::vector<ElementSet> theta_star(const NearnessInstance& n, std::size_t p);
NearnessInstance theta_star_instance(const NearnessInstance& n, std::size_t p);

// Θ|S = {C : C ∪ D ∈ Θ^≤ for every F^S-Cauchy D}, where
// F^S = {F : F ∪ S not near}. Both families are closed upward, so the
// ⊆-minimal generators of F^S and its minimal transversals decide membership.
class RestrictedFamily {
 public:
  RestrictedFamily(const NearnessInstance& n, Mask s);

  Mask subject() const { return s_; }
  const std::vector<Mask>& f_generators() const { return f_gens_; }
  const std::vector<Mask>& minimal_cauchy() const { return transversals_; }

  bool contains(Mask c) const;
  // Every member, in increasing mask order.
  std::vector<Mask> members() const;
  std::vector<Mask> minimal_members() const;
  // The same family as an instance with refinement closure.
  NearnessInstance as_instance() const;

 private:
  NearnessInstance n_;
  Mask s_;
  std::vector<Mask> f_gens_;
  std::vector<Mask> transversals_;
};

RestrictedFamily restriction_family(const NearnessInstance& n, const ElementSet& s);
std::vector<ElementSet> f_family(const NearnessInstance& n, const ElementSet& s);
// Membership in Θ|S by quantifying over every D ⊆ P and every F ⊆ P.
bool restriction_contains_oracle(const NearnessInstance& n, Mask s, Mask c);

bool is_nearly_finite(const NearnessInstance& n);
bool is_non_degenerate(const NearnessInstance& n);

// p ⊲ q iff Cp ≤ {q} for some C in Θ; p ⊴ q iff p^▷ ⊆ q^▷.
struct BelowRelation {
  std::vector<Mask> above;        // above[p] = {q : p ⊲ q}
  std::vector<Mask> below;        // below[q] = q^▷ = {p : p ⊲ q}
  std::vector<Mask> lower_above;  // lower_above[p] = {q : p ⊴ q}

  bool ub(std::size_t p, std::size_t q) const { return (above[p] >> q) & 1U; }
  bool lower(std::size_t p, std::size_t q) const { return (lower_above[p] >> q) & 1U; }
  // C^▷: elements uniformly below some member of c.
  Mask regular_part(Mask c) const;
  bool transitive() const;
};

BelowRelation below_relations(const NearnessInstance& n);

// Every pair of elements of S (including equal ones) is near.
bool is_linked(const NearnessInstance& n, const ElementSet& s);
// Every element has a ⊲-smaller element in S.
bool is_regular_set(const BelowRelation& r, Mask s);
// ⊲-closed and ⊲-directed (every finite subset, including the empty one, has
// a common ⊲-lower element in S).
bool is_regular_filter(const BelowRelation& r, Mask s);

// For every p and C in Θ there is D in Θ with Dp ⊲ C.
bool is_star_regular(const NearnessInstance& n);

enum class Priming { stage_local, original };

struct Regularisation {
  std::vector<std::vector<Mask>> stages;  // Θ^1 = Θ, Θ^2, ... up to the first repeat
  std::size_t cycle_start = 0;            // index of the stage the sequence returns to
  std::vector<Mask> family;               // Θ^R, in order of first appearance
  NearnessInstance instance(const NearnessInstance& base) const;
};

Regularisation regularise(const NearnessInstance& n, Priming priming = Priming::stage_local);

// Θ-Cauchy ⊲-filters contained in Ṗ, in increasing mask order.
std::vector<Mask> regular_cauchy_filters(const NearnessInstance& n, const BelowRelation& r);

// The directed replacement (F(P), ≤^F, Θ^F). Finite subsets are masks.
struct DirectedReplacement {
  std::size_t universe = 0;              // |F(P)| = 2^|P|
  std::vector<PointSet> points;          // spectrum of Θ^F as subsets of F(P)
  bool all_round = true;                 // each candidate passed the direct roundness check
  std::vector<PointSet> expected;        // {F(R) : R in Θ̂}
  bool equation_holds() const { return points == expected; }
};

// literal = true reads "C ∈ Θ" as literal membership; the default uses Θ^≤.
DirectedReplacement directed_replacement(const NearnessInstance& n, bool literal = false);
// Enumerates every up-set of F(P) and every Φ ⊆ F(P); |P| <= 3.
std::vector<PointSet> directed_replacement_oracle(const NearnessInstance& n, bool literal = false);

}  // namespace nearposet
