#pragma once

#include <string>
#include <vector>

#include "nearposet/nearness.hpp"

namespace nearposet {

// A finite distributive lattice, hence a frame, with its Heyting implication.
class FiniteFrame {
 public:
  // Throws InvalidInput if the order is not a distributive lattice.
  explicit FiniteFrame(Poset p);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t join_of(Mask s) const;
  // a → b: the largest r with r ∧ a ≤ b.
  std::size_t heyting(std::size_t a, std::size_t b) const { return implies_[a * size() + b]; }

  // Smallest superset closed under all meets (the empty meet is the top).
  Mask meet_closure(Mask s) const;
  bool is_sublocale(Mask s) const;

 private:
  Poset poset_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> implies_;
};

// Sublocales are carried as element sets.
ElementSet closed_sublocale(const FiniteFrame& f, std::size_t p);  // p^≤
ElementSet open_sublocale(const FiniteFrame& f, std::size_t p);    // {p → q}
ElementSet sublocale_join(const FiniteFrame& f, const std::vector<ElementSet>& parts);

// In a frame the ≤-covers are exactly the sets with join 1.
bool is_frame_cover(const FiniteFrame& f, Mask c);

struct PPEquivReport {
  bool theta_upset = false;
  bool picado_pultr = false;       // left-hand side
  bool theta_in_covers = false;
  bool opens_match = false;        // 𝔬(p) = ⋁{𝔠(q) : C \ q^≥ ≤ p for some C in Θ}, all p
  std::vector<std::string> mismatches;

  bool rhs() const { return theta_in_covers && opens_match; }
  bool agree() const { return picado_pultr == rhs(); }
};

PPEquivReport pp_equiv_check(const FiniteFrame& f, const NearnessInstance& n);

}  // namespace nearposet
