#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nearposet/nearness.hpp"

namespace nearposet {

enum class FamilyRole { subbasis, basis };

// A finite set X with a named family of subsets generating its topology.
// Points and family members are bit masks over X; the family ordered by ⊆
// is the poset P of the associated nearness instance.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> points,
              const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
              FamilyRole role);
  // Points named x0, x1, ... and sets named s0, s1, ...
  FiniteSpace(std::size_t points, const std::vector<Mask>& sets, FamilyRole role);

  std::size_t point_count() const { return points_.size(); }
  const std::string& point_name(std::size_t x) const { return points_.at(x); }
  const std::vector<std::string>& point_names() const { return points_; }
  std::size_t set_count() const { return sets_.size(); }
  Mask set(std::size_t i) const { return sets_.at(i); }
  const std::vector<Mask>& sets() const { return sets_; }
  FamilyRole role() const { return role_; }
  Mask all_points() const { return full_mask(points_.size()); }
  const Poset& family() const { return family_; }

  // P_x: members containing x, as a set of family indices.
  Mask members_at(std::size_t x) const;
  // Union of the members in a family mask.
  Mask union_of(Mask members) const;
  // Members meeting the point set q (the concrete star C*q).
  Mask meeting(Mask members, Mask q) const;

  // Open sets of the generated topology in increasing order.
  const std::vector<Mask>& topology() const { return topology_; }
  bool is_open(Mask s) const;
  Mask closure(Mask s) const;
  // The family is a basis of the generated topology.
  bool is_basis() const;
  bool is_cover(Mask members) const { return union_of(members) == all_points(); }

  std::string format_points(Mask s) const;

 private:
  void build();

  std::vector<std::string> points_;
  std::vector<Mask> sets_;
  FamilyRole role_;
  Poset family_;
  std::vector<Mask> topology_;
};

bool is_t1_family(const FiniteSpace& s);
bool is_td_family(const FiniteSpace& s);

// ⊆-minimal covers of X by family members, in increasing mask order.
std::vector<Mask> minimal_covers(const FiniteSpace& s);

struct CoverMode {
  enum class Kind { all, sample } kind = Kind::all;
  std::size_t extra = 0;       // sample: covers added beyond a coinitial core
  std::uint64_t seed = 0;

  static CoverMode all() { return {}; }
  static CoverMode sample(std::size_t extra, std::uint64_t seed) { return {Kind::sample, extra, seed}; }
};

// Θ = C_X(P) (every cover, as the superset closure of the minimal covers), or
// a seeded sample of covers that is coinitial in C_X(P).
NearnessInstance cover_family(const FiniteSpace& s, const CoverMode& mode = CoverMode::all());
// An arbitrary family Θ ⊆ P(P), given as family-index masks.
NearnessInstance space_instance(const FiniteSpace& s, std::vector<Mask> theta);

bool theta_in_covers(const FiniteSpace& s, const NearnessInstance& n);
bool is_cover_coinitial(const FiniteSpace& s, const NearnessInstance& n);

struct RoundTripReport {
  bool t1 = false;
  bool theta_in_covers = false;
  bool coinitial = false;
  bool bijective = false;          // x ↦ P_x is a bijection onto Θ̂
  bool subbasis_matches = false;   // x ∈ p ⇔ P_x ∈ Θ̂_p
  bool order_matches = false;      // p ⊆ q ⇔ Θ̂_p ⊆ Θ̂_q
  std::vector<std::string> notes;

  bool hypotheses() const { return t1 && theta_in_covers && coinitial; }
  bool recovered() const { return bijective && subbasis_matches && order_matches; }
};

RoundTripReport roundtrip_t1(const FiniteSpace& s, const NearnessInstance& n);

// C*p = {c ∈ C : c ∩ p ≠ ∅}, for a family mask c and a member index p.
Mask star_concrete(const FiniteSpace& s, Mask c, std::size_t p);
// C_X(P) ⊆ (Θ*p)^≤ for every member p.
bool is_star_coinitial(const FiniteSpace& s, const NearnessInstance& n);
// (⋃C_x)_{C∈Θ} is a neighbourhood base at every x.
bool is_compatible(const FiniteSpace& s, const NearnessInstance& n);
// For all x and C ∈ Θ there is D ∈ Θ with ⋃(D * ⋃D_x) ⊆ ⋃C_x.
bool is_locally_uniform(const FiniteSpace& s, const NearnessInstance& n);
// (⋃(C * ⋃C_x))_{C∈Θ} is a neighbourhood base at every x.
bool is_uniform_base(const FiniteSpace& s, const NearnessInstance& n);
// Every Θ-Cauchy ⊲-filter contains some P_x.
bool is_complete(const FiniteSpace& s, const NearnessInstance& n);

// For Θ = C_X(P): T is near iff ⋂T ≠ ∅, for every T ⊆ P.
bool near_equals_intersection(const FiniteSpace& s, const NearnessInstance& n);
// For Θ coinitial in C_X(P): Θ|T = C_{cl(⋂T)}(P) for every T ⊆ P.
bool restriction_equals_closure_covers(const FiniteSpace& s, const NearnessInstance& n);

}  // namespace nearposet
