#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearposet/bits.hpp"

namespace nearposet {

class ElementSet;

// A finite partial order. Elements are indexed in input order; up(i) and
// down(i) are the principal up- and down-sets as bit masks.
class Poset {
 public:
  Poset();

  // Takes the reflexive-transitive closure of the pairs (p <= q) and rejects
  // the result when antisymmetry fails.
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& order);

  // up[i] lists the elements known to be >= i; closure is applied.
  Poset(std::vector<std::string> elements, std::vector<Mask> up);
  Poset(std::vector<std::string> elements, std::initializer_list<std::pair<std::string, std::string>> order)
      : Poset(std::move(elements), std::vector<std::pair<std::string, std::string>>(order)) {}

  std::size_t size() const { return names_.size(); }
  std::uint64_t id() const { return id_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  bool leq(std::size_t p, std::size_t q) const { return (up_[p] >> q) & 1U; }
  Mask up(std::size_t p) const { return up_[p]; }
  Mask down(std::size_t p) const { return down_[p]; }
  Mask all() const { return full_mask(size()); }

  Mask up_closure(Mask s) const;
  Mask down_closure(Mask s) const;
  bool is_upset(Mask s) const { return up_closure(s) == s; }
  bool is_downset(Mask s) const { return down_closure(s) == s; }

  // Refinement: every r in a lies below some s in b.
  bool refines(Mask a, Mask b) const { return is_subset(a, down_closure(b)); }

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;

  // Least upper bound of s, if it exists (lub of the empty set is the minimum).
  std::optional<std::size_t> join(Mask s) const;
  std::optional<std::size_t> meet(Mask s) const;

  bool same_instance(const Poset& other) const { return id_ == other.id_; }
  void require_same(const Poset& other) const;

  ElementSet set(Mask m) const;
  ElementSet set(const std::vector<std::string>& names) const;
  ElementSet empty_set() const;
  ElementSet full_set() const;

  std::string format(Mask m) const;

 private:
  void close_and_check();

  std::uint64_t id_;
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

// A subset of a specific poset. Mixing sets of different posets throws
// InstanceMismatch. Ordered by the numeric value of the membership mask, with
// element i as bit i.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(const Poset& p, Mask bits);

  Mask bits() const { return bits_; }
  std::uint64_t owner() const { return owner_; }
  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(popcount(bits_)); }
  std::vector<std::size_t> indices() const;

  ElementSet with(std::size_t i) const;
  ElementSet without(std::size_t i) const;
  ElementSet complement() const;

  ElementSet operator|(const ElementSet& o) const;
  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator-(const ElementSet& o) const;
  bool subset_of(const ElementSet& o) const;

  bool operator==(const ElementSet& o) const;
  std::strong_ordering operator<=>(const ElementSet& o) const;

  void check_same(const ElementSet& o) const;
  void check_owner(const Poset& p) const;

 private:
  ElementSet(std::uint64_t owner, std::size_t universe, Mask bits)
      : owner_(owner), universe_(universe), bits_(bits) {}

  std::uint64_t owner_ = 0;
  std::size_t universe_ = 0;
  Mask bits_ = 0;
};

// Calls f on every up-set (resp. down-set) in increasing mask order. f returns
// false to stop early.
void for_each_upset(const Poset& p, const std::function<bool(Mask)>& f);
void for_each_downset(const Poset& p, const std::function<bool(Mask)>& f);

std::vector<ElementSet> enumerate_upsets(const Poset& p);
std::vector<ElementSet> enumerate_downsets(const Poset& p);

ElementSet closure_up(const Poset& p, const ElementSet& s);
ElementSet closure_down(const Poset& p, const ElementSet& s);
bool is_upset(const Poset& p, const ElementSet& s);
bool is_downset(const Poset& p, const ElementSet& s);

// Every finite subset of s (including the empty one) has a lower bound in s.
bool is_directed(const Poset& p, const ElementSet& s);
bool is_filter(const Poset& p, const ElementSet& s);

bool refines(const Poset& p, const ElementSet& a, const ElementSet& b);

}  // namespace nearposet
