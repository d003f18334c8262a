#include "nearposet/poset.hpp"

#include <atomic>
#include <set>

#include "nearposet/error.hpp"

namespace nearposet {

namespace {

std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

void check_names(const std::vector<std::string>& names) {
  if (names.size() > kMaxElements) {
    throw InvalidInput("at most " + std::to_string(kMaxElements) + " elements are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidInput("element names must be non-empty");
    if (!seen.insert(n).second) throw InvalidInput("duplicate element '" + n + "'");
  }
}

}  // namespace

Poset::Poset() : id_(next_id()) {}

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& order)
    : id_(next_id()), names_(std::move(elements)) {
  check_names(names_);
  up_.assign(names_.size(), 0);
  for (const auto& [p, q] : order) {
    auto i = index_of(p);
    auto j = index_of(q);
    if (!i) throw InvalidInput("unknown element '" + p + "' in order");
    if (!j) throw InvalidInput("unknown element '" + q + "' in order");
    up_[*i] |= bit(*j);
  }
  close_and_check();
}

Poset::Poset(std::vector<std::string> elements, std::vector<Mask> up)
    : id_(next_id()), names_(std::move(elements)), up_(std::move(up)) {
  check_names(names_);
  if (up_.size() != names_.size()) throw InvalidInput("relation size does not match elements");
  for (Mask& m : up_) m &= full_mask(names_.size());
  close_and_check();
}

void Poset::close_and_check() {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) up_[i] |= bit(i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((up_[i] >> k) & 1U) up_[i] |= up_[k];
    }
  }
  down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up_[i], [&](std::size_t j) { down_[j] |= bit(i); });
  }
  for (std::size_t i = 0; i < n; ++i) {
    Mask both = up_[i] & down_[i] & ~bit(i);
    if (both) {
      std::size_t j = static_cast<std::size_t>(std::countr_zero(both));
      throw InvalidInput("antisymmetry fails: " + names_[i] + " <= " + names_[j] + " and " +
                         names_[j] + " <= " + names_[i]);
    }
  }
}

std::optional<std::size_t> Poset::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Poset::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw InvalidInput("unknown element '" + name + "'");
  return *i;
}

Mask Poset::up_closure(Mask s) const {
  Mask r = 0;
  for_each_bit(s, [&](std::size_t i) { r |= up_[i]; });
  return r;
}

Mask Poset::down_closure(Mask s) const {
  Mask r = 0;
  for_each_bit(s, [&](std::size_t i) { r |= down_[i]; });
  return r;
}

std::optional<std::size_t> Poset::minimum() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i] == all()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::maximum() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i] == all()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::join(Mask s) const {
  Mask ub = all();
  for_each_bit(s, [&](std::size_t i) { ub &= up_[i]; });
  for (std::size_t i = 0; i < size(); ++i) {
    if (((ub >> i) & 1U) && is_subset(ub, up_[i])) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::meet(Mask s) const {
  Mask lb = all();
  for_each_bit(s, [&](std::size_t i) { lb &= down_[i]; });
  for (std::size_t i = 0; i < size(); ++i) {
    if (((lb >> i) & 1U) && is_subset(lb, down_[i])) return i;
  }
  return std::nullopt;
}

void Poset::require_same(const Poset& other) const {
  if (!same_instance(other)) throw InstanceMismatch("objects belong to different posets");
}

ElementSet Poset::set(Mask m) const { return ElementSet(*this, m); }

ElementSet Poset::set(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= bit(require_index(n));
  return ElementSet(*this, m);
}

ElementSet Poset::empty_set() const { return ElementSet(*this, 0); }
ElementSet Poset::full_set() const { return ElementSet(*this, all()); }

std::string Poset::format(Mask m) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  });
  return out + "}";
}

ElementSet::ElementSet(const Poset& p, Mask bits)
    : owner_(p.id()), universe_(p.size()), bits_(bits) {
  if (bits & ~p.all()) throw InvalidInput("set contains indices outside the poset");
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  for_each_bit(bits_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

ElementSet ElementSet::with(std::size_t i) const {
  if (i >= universe_) throw InvalidInput("element index out of range");
  return ElementSet(owner_, universe_, bits_ | bit(i));
}

ElementSet ElementSet::without(std::size_t i) const {
  return ElementSet(owner_, universe_, bits_ & ~bit(i));
}

ElementSet ElementSet::complement() const {
  return ElementSet(owner_, universe_, full_mask(universe_) & ~bits_);
}

void ElementSet::check_same(const ElementSet& o) const {
  if (owner_ != o.owner_) throw InstanceMismatch("sets belong to different posets");
}

void ElementSet::check_owner(const Poset& p) const {
  if (owner_ != p.id()) throw InstanceMismatch("set does not belong to this poset");
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  check_same(o);
  return ElementSet(owner_, universe_, bits_ | o.bits_);
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  check_same(o);
  return ElementSet(owner_, universe_, bits_ & o.bits_);
}

ElementSet ElementSet::operator-(const ElementSet& o) const {
  check_same(o);
  return ElementSet(owner_, universe_, bits_ & ~o.bits_);
}

bool ElementSet::subset_of(const ElementSet& o) const {
  check_same(o);
  return is_subset(bits_, o.bits_);
}

bool ElementSet::operator==(const ElementSet& o) const {
  return owner_ == o.owner_ && bits_ == o.bits_;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& o) const {
  if (auto c = bits_ <=> o.bits_; c != 0) return c;
  return owner_ <=> o.owner_;
}

namespace {

// Decides elements from the highest index down, trying "out" before "in", so
// sets come out in increasing numeric order. Forced memberships keep every
// branch consistent.
bool walk_upsets(const Poset& p, std::size_t i, Mask in, Mask out,
                 const std::function<bool(Mask)>& f) {
  if (i == 0) return f(in);
  const std::size_t k = i - 1;
  if ((in >> k) & 1U) return walk_upsets(p, k, in, out, f);
  if ((out >> k) & 1U) return walk_upsets(p, k, in, out, f);
  if (!walk_upsets(p, k, in, out | p.down(k), f)) return false;
  return walk_upsets(p, k, in | p.up(k), out, f);
}

bool walk_downsets(const Poset& p, std::size_t i, Mask in, Mask out,
                   const std::function<bool(Mask)>& f) {
  if (i == 0) return f(in);
  const std::size_t k = i - 1;
  if ((in >> k) & 1U) return walk_downsets(p, k, in, out, f);
  if ((out >> k) & 1U) return walk_downsets(p, k, in, out, f);
  if (!walk_downsets(p, k, in, out | p.up(k), f)) return false;
  return walk_downsets(p, k, in | p.down(k), out, f);
}

}  // namespace

void for_each_upset(const Poset& p, const std::function<bool(Mask)>& f) {
  walk_upsets(p, p.size(), 0, 0, f);
}

void for_each_downset(const Poset& p, const std::function<bool(Mask)>& f) {
  walk_downsets(p, p.size(), 0, 0, f);
}

std::vector<ElementSet> enumerate_upsets(const Poset& p) {
  std::vector<ElementSet> out;
  for_each_upset(p, [&](Mask m) {
    out.push_back(p.set(m));
    return true;
  });
  return out;
}

std::vector<ElementSet> enumerate_downsets(const Poset& p) {
  std::vector<ElementSet> out;
  for_each_downset(p, [&](Mask m) {
    out.push_back(p.set(m));
    return true;
  });
  return out;
}

ElementSet closure_up(const Poset& p, const ElementSet& s) {
  s.check_owner(p);
  return p.set(p.up_closure(s.bits()));
}

ElementSet closure_down(const Poset& p, const ElementSet& s) {
  s.check_owner(p);
  return p.set(p.down_closure(s.bits()));
}

bool is_upset(const Poset& p, const ElementSet& s) {
  s.check_owner(p);
  return p.is_upset(s.bits());
}

bool is_downset(const Poset& p, const ElementSet& s) {
  s.check_owner(p);
  return p.is_downset(s.bits());
}

bool is_directed(const Poset& p, const ElementSet& s) {
  s.check_owner(p);
  const Mask m = s.bits();
  if (m == 0) return false;
  // Pairwise lower bounds in s extend to every finite subset by induction.
  bool ok = true;
  for_each_bit(m, [&](std::size_t a) {
    for_each_bit(m, [&](std::size_t b) {
      if (ok && (p.down(a) & p.down(b) & m) == 0) ok = false;
    });
  });
  return ok;
}

bool is_filter(const Poset& p, const ElementSet& s) { return is_upset(p, s) && is_directed(p, s); }

bool refines(const Poset& p, const ElementSet& a, const ElementSet& b) {
  a.check_owner(p);
  b.check_owner(p);
  return p.refines(a.bits(), b.bits());
}

}  // namespace nearposet
