#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearposet/bounds.hpp"
#include "nearposet/poset.hpp"

namespace nearposet {

using PointSet = boost::dynamic_bitset<>;

// How the listed sets determine the family Θ.
enum class ThetaClosure {
  none,        // Θ is exactly the listed sets
  superset,    // Θ is every superset of a listed set
  refinement,  // Θ is every set refined by a listed set (Θ = Θ^≤)
};

struct Spectrum;
struct NearTable;
namespace detail {
struct InstanceCache;
}

// A finite nearness poset (P, <=, Θ). Immutable; derived tables are computed
// lazily and shared between copies.
class NearnessInstance {
 public:
  NearnessInstance(Poset poset, const std::vector<ElementSet>& theta,
                   ThetaClosure closure = ThetaClosure::none,
                   const Bounds& bounds = default_bounds());
  NearnessInstance(Poset poset, std::vector<Mask> theta,
                   ThetaClosure closure = ThetaClosure::none,
                   const Bounds& bounds = default_bounds());
  NearnessInstance(Poset poset, std::initializer_list<Mask> theta,
                   ThetaClosure closure = ThetaClosure::none,
                   const Bounds& bounds = default_bounds())
      : NearnessInstance(std::move(poset), std::vector<Mask>(theta), closure, bounds) {}

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  ThetaClosure closure() const { return closure_; }
  const Bounds& bounds() const { return bounds_; }

  // The listed sets, duplicates removed, in input order.
  const std::vector<Mask>& generators() const { return gens_; }
  std::vector<ElementSet> theta() const;
  bool theta_empty() const { return gens_.empty(); }

  // Literal membership in Θ.
  bool contains(Mask c) const;
  // Membership in Θ^≤: some member of Θ refines s.
  bool in_theta_le(Mask s) const;
  // Visits every member of Θ. Listed families keep input order; closed
  // families are scanned in increasing mask order. f returns false to stop.
  void for_each_member(const std::function<bool(Mask)>& f) const;

  bool is_cauchy(Mask s) const;
  bool is_round(Mask s) const;

  const Spectrum& spectrum() const;
  const NearTable& near_table() const;

  std::string format(Mask m) const { return poset_.format(m); }

 private:
  Poset poset_;
  std::vector<Mask> gens_;
  std::vector<Mask> sorted_gens_;
  ThetaClosure closure_;
  Bounds bounds_;
  std::shared_ptr<detail::InstanceCache> cache_;
};

// Round Cauchy up-sets in increasing mask order, with the subbasic sets
// Θ̂_p = {R : p in R} indexed by element.
struct Spectrum {
  std::vector<ElementSet> points;
  std::vector<Mask> masks;
  std::vector<PointSet> subbasic;

  std::size_t size() const { return points.size(); }
  // Θ̂_F: points containing every element of f.
  PointSet basic(Mask f) const;
  std::optional<std::size_t> find(Mask m) const;
};

// Near witnesses over down-sets: each entry is a down-set D outside Θ^≤
// together with A(D) = {s : D ∪ {s} ∈ Θ^≤}. S is near iff S ⊆ A(D) for some D.
struct NearTable {
  std::vector<std::pair<Mask, Mask>> witnesses;
  std::vector<Mask> maximal;
  std::vector<Mask> pair_near;
  Mask dotted = 0;

  bool near(Mask s) const;
};

bool in_theta_le(const NearnessInstance& n, const ElementSet& s);
bool is_cauchy(const NearnessInstance& n, const ElementSet& s);
bool is_round(const NearnessInstance& n, const ElementSet& s);

const Spectrum& spectrum(const NearnessInstance& n);
// ⊆-minimal Θ^≤-Cauchy subsets, found by scanning all of P(P).
std::vector<ElementSet> spectrum_oracle(const NearnessInstance& n);

// Spectrum of a family given only by a Θ^≤-style membership predicate: the
// ⊆-minimal sets whose complement is not a member.
std::vector<Mask> spectrum_of_closed_family(const Poset& p, const std::function<bool(Mask)>& member);

enum class OrderFamily { theta, theta_le, restriction_empty };

// p <=_G q iff G^p ⊆ G^q, where G^S = {R : R ∪ S ∈ G}.
bool leq_theta(const NearnessInstance& n, std::size_t p, std::size_t q, OrderFamily family);
// Same relation, always scanning every R ⊆ P.
bool leq_theta_oracle(const NearnessInstance& n, std::size_t p, std::size_t q, OrderFamily family);
// For a family given as a predicate. downsets_only is valid when the family
// is closed under refinement.
bool leq_under(const Poset& p, const std::function<bool(Mask)>& member, bool downsets_only,
               std::size_t a, std::size_t b);

// Family-level properties of Θ with respect to refinement.
bool is_theta_directed(const NearnessInstance& n);
bool is_theta_upset(const NearnessInstance& n);
bool is_theta_filter(const NearnessInstance& n);
bool is_theta_subset_closed(const NearnessInstance& n);
// Closed under F <=_Θ G, the refinement induced by <=_Θ.
bool is_theta_leq_theta_closed(const NearnessInstance& n);

struct DegenerateReport {
  bool theta_empty = false;
  bool empty_in_theta = false;
  std::optional<std::size_t> minimum;
  bool minimum_in_theta = false;

  bool empty_is_point = false;
  bool spectrum_is_empty_point = false;
  bool spectrum_empty = false;
  bool full_is_point = false;
  bool spectrum_is_full = false;
  bool points_avoid_minimum = false;

  std::vector<std::string> fired;
  std::vector<std::string> violated;

  bool consistent() const { return violated.empty(); }
};

DegenerateReport classify_degenerate(const NearnessInstance& n);

}  // namespace nearposet
