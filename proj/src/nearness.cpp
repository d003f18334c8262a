#include "nearposet/nearness.hpp"

#include <algorithm>

#include "instance_cache.hpp"
#include "nearposet/error.hpp"
#include "nearposet/proximity.hpp"

namespace nearposet {

namespace {

std::vector<Mask> to_masks(const Poset& p, const std::vector<ElementSet>& sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    s.check_owner(p);
    out.push_back(s.bits());
  }
  return out;
}

}  // namespace

NearnessInstance::NearnessInstance(Poset poset, const std::vector<ElementSet>& theta,
                                   ThetaClosure closure, const Bounds& bounds)
    : NearnessInstance(poset, to_masks(poset, theta), closure, bounds) {}

NearnessInstance::NearnessInstance(Poset poset, std::vector<Mask> theta, ThetaClosure closure,
                                   const Bounds& bounds)
    : poset_(std::move(poset)),
      closure_(closure),
      bounds_(bounds),
      cache_(std::make_shared<detail::InstanceCache>()) {
  for (Mask c : theta) {
    if (c & ~poset_.all()) throw InvalidInput("family member contains indices outside the poset");
    if (std::find(gens_.begin(), gens_.end(), c) == gens_.end()) gens_.push_back(c);
  }
  sorted_gens_ = gens_;
  std::sort(sorted_gens_.begin(), sorted_gens_.end());
}

std::vector<ElementSet> NearnessInstance::theta() const {
  std::vector<ElementSet> out;
  out.reserve(gens_.size());
  for (Mask c : gens_) out.push_back(poset_.set(c));
  return out;
}

bool NearnessInstance::contains(Mask c) const {
  switch (closure_) {
    case ThetaClosure::none:
      return std::binary_search(sorted_gens_.begin(), sorted_gens_.end(), c);
    case ThetaClosure::superset:
      return std::any_of(gens_.begin(), gens_.end(), [&](Mask g) { return is_subset(g, c); });
    case ThetaClosure::refinement:
      return in_theta_le(c);
  }
  return false;
}

bool NearnessInstance::in_theta_le(Mask s) const {
  const Mask d = poset_.down_closure(s);
  return std::any_of(gens_.begin(), gens_.end(), [&](Mask g) { return is_subset(g, d); });
}

void NearnessInstance::for_each_member(const std::function<bool(Mask)>& f) const {
  if (closure_ == ThetaClosure::none) {
    for (Mask c : gens_) {
      if (!f(c)) return;
    }
    return;
  }
  if (gens_.empty()) return;
  Bounds::require(size(), bounds_.powerset, "scanning a closed family");
  const Mask all = poset_.all();
  for (Mask c = 0;; ++c) {
    if (contains(c) && !f(c)) return;
    if (c == all) break;
  }
}

bool NearnessInstance::is_cauchy(Mask s) const {
  if (closure_ == ThetaClosure::refinement) return !in_theta_le(poset_.all() & ~s);
  // For superset closures the minimal members decide.
  return std::all_of(gens_.begin(), gens_.end(), [&](Mask c) { return (c & s) != 0; });
}

bool NearnessInstance::is_round(Mask s) const {
  bool ok = true;
  for_each_bit(s, [&](std::size_t x) {
    if (!ok) return;
    const Mask below = poset_.down(x);
    if (closure_ == ThetaClosure::refinement) {
      // The largest candidate is the complement of s plus the part below x.
      ok = in_theta_le((poset_.all() & ~s) | (s & below));
      return;
    }
    ok = std::any_of(gens_.begin(), gens_.end(), [&](Mask c) { return is_subset(c & s, below); });
  });
  return ok;
}

const Spectrum& NearnessInstance::spectrum() const {
  std::call_once(cache_->spectrum_once, [&] {
    Bounds::require(size(), bounds_.powerset, "spectrum");
    auto sp = std::make_unique<Spectrum>();
    for_each_upset(poset_, [&](Mask r) {
      if (is_cauchy(r) && is_round(r)) {
        sp->points.push_back(poset_.set(r));
        sp->masks.push_back(r);
      }
      return true;
    });
    sp->subbasic.assign(size(), PointSet(sp->masks.size()));
    for (std::size_t i = 0; i < sp->masks.size(); ++i) {
      for_each_bit(sp->masks[i], [&](std::size_t p) { sp->subbasic[p].set(i); });
    }
    cache_->spectrum = std::move(sp);
  });
  return *cache_->spectrum;
}

PointSet Spectrum::basic(Mask f) const {
  PointSet out(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (is_subset(f, masks[i])) out.set(i);
  }
  return out;
}

std::optional<std::size_t> Spectrum::find(Mask m) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), m);
  if (it == masks.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - masks.begin());
}

bool in_theta_le(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  return n.in_theta_le(s.bits());
}

bool is_cauchy(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  return n.is_cauchy(s.bits());
}

bool is_round(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  return n.is_round(s.bits());
}

const Spectrum& spectrum(const NearnessInstance& n) { return n.spectrum(); }

std::vector<Mask> spectrum_of_closed_family(const Poset& p, const std::function<bool(Mask)>& member) {
  const Mask all = p.all();
  std::vector<Mask> out;
  for (Mask s = 0;; ++s) {
    if (!member(all & ~s)) {
      bool minimal = true;
      for_each_bit(s, [&](std::size_t x) {
        if (minimal && !member(all & ~(s & ~bit(x)))) minimal = false;
      });
      if (minimal) out.push_back(s);
    }
    if (s == all) break;
  }
  return out;
}

std::vector<ElementSet> spectrum_oracle(const NearnessInstance& n) {
  Bounds::require(n.size(), n.bounds().powerset, "spectrum oracle");
  std::vector<ElementSet> out;
  for (Mask m : spectrum_of_closed_family(n.poset(), [&](Mask s) { return n.in_theta_le(s); })) {
    out.push_back(n.poset().set(m));
  }
  return out;
}

bool leq_under(const Poset& p, const std::function<bool(Mask)>& member, bool downsets_only,
               std::size_t a, std::size_t b) {
  bool ok = true;
  auto visit = [&](Mask r) {
    if (member(r | bit(a)) && !member(r | bit(b))) ok = false;
    return ok;
  };
  if (downsets_only) {
    for_each_downset(p, visit);
  } else {
    const Mask all = p.all();
    for (Mask r = 0;; ++r) {
      if (!visit(r) || r == all) break;
    }
  }
  return ok;
}

namespace {

std::function<bool(Mask)> family_member(const NearnessInstance& n, OrderFamily family,
                                        std::shared_ptr<RestrictedFamily>& keep) {
  switch (family) {
    case OrderFamily::theta:
      return [&n](Mask c) { return n.contains(c); };
    case OrderFamily::theta_le:
      return [&n](Mask c) { return n.in_theta_le(c); };
    case OrderFamily::restriction_empty:
      keep = std::make_shared<RestrictedFamily>(restriction_family(n, n.poset().empty_set()));
      return [r = keep](Mask c) { return r->contains(c); };
  }
  return {};
}

void check_pair(const NearnessInstance& n, std::size_t p, std::size_t q) {
  if (p >= n.size() || q >= n.size()) throw InvalidInput("element index out of range");
  Bounds::require(n.size(), n.bounds().powerset, "order comparison");
}

}  // namespace

bool leq_theta(const NearnessInstance& n, std::size_t p, std::size_t q, OrderFamily family) {
  check_pair(n, p, q);
  std::shared_ptr<RestrictedFamily> keep;
  auto member = family_member(n, family, keep);
  const bool closed = family != OrderFamily::theta || n.closure() == ThetaClosure::refinement;
  return leq_under(n.poset(), member, closed, p, q);
}

bool leq_theta_oracle(const NearnessInstance& n, std::size_t p, std::size_t q, OrderFamily family) {
  check_pair(n, p, q);
  std::shared_ptr<RestrictedFamily> keep;
  auto member = family_member(n, family, keep);
  return leq_under(n.poset(), member, false, p, q);
}

bool is_theta_directed(const NearnessInstance& n) {
  const auto& gens = n.generators();
  if (gens.empty()) return false;
  // Generators suffice: a lower bound of two generators bounds anything
  // above them, and every member lies above some generator.
  const Poset& p = n.poset();
  for (Mask c : gens) {
    for (Mask d : gens) {
      bool found = false;
      for (Mask e : gens) {
        if (p.refines(e, c) && p.refines(e, d)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_theta_upset(const NearnessInstance& n) {
  if (n.closure() == ThetaClosure::refinement) return true;
  Bounds::require(n.size(), n.bounds().powerset, "up-set test");
  const Mask all = n.poset().all();
  for (Mask g = 0;; ++g) {
    if (n.in_theta_le(g) && !n.contains(g)) return false;
    if (g == all) break;
  }
  return true;
}

bool is_theta_filter(const NearnessInstance& n) { return is_theta_upset(n) && is_theta_directed(n); }

bool is_theta_subset_closed(const NearnessInstance& n) {
  if (n.closure() != ThetaClosure::none) return true;
  const Mask all = n.poset().all();
  for (Mask c : n.generators()) {
    bool ok = true;
    for_each_submask(all & ~c, [&](Mask extra) {
      if (ok && !n.contains(c | extra)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_theta_leq_theta_closed(const NearnessInstance& n) {
  Bounds::require(n.size(), n.bounds().powerset, "closure test");
  const std::size_t sz = n.size();
  std::vector<Mask> above(sz, 0);  // above[p] = {q : p <=_Θ q}
  for (std::size_t p = 0; p < sz; ++p) {
    for (std::size_t q = 0; q < sz; ++q) {
      if (leq_theta(n, p, q, OrderFamily::theta)) above[p] |= bit(q);
    }
  }
  const Mask all = n.poset().all();
  bool ok = true;
  n.for_each_member([&](Mask c) {
    for (Mask g = 0;; ++g) {
      bool refined = true;
      for_each_bit(c, [&](std::size_t x) {
        if ((above[x] & g) == 0) refined = false;
      });
      if (refined && !n.contains(g)) {
        ok = false;
        break;
      }
      if (g == all) break;
    }
    return ok;
  });
  return ok;
}

DegenerateReport classify_degenerate(const NearnessInstance& n) {
  DegenerateReport r;
  const Poset& p = n.poset();
  const Spectrum& sp = n.spectrum();
  r.theta_empty = n.theta_empty();
  r.empty_in_theta = n.contains(0);
  r.minimum = p.minimum();
  r.empty_is_point = sp.find(0).has_value();
  r.spectrum_is_empty_point = sp.size() == 1 && sp.masks[0] == 0;
  r.spectrum_empty = sp.size() == 0;
  r.full_is_point = sp.find(p.all()).has_value();
  r.spectrum_is_full = sp.size() == 1 && sp.masks[0] == p.all();

  auto check = [&](bool fires, bool holds, const std::string& text) {
    if (fires) r.fired.push_back(text);
    if (!holds) r.violated.push_back(text);
  };

  check(r.theta_empty, r.theta_empty == r.empty_is_point && r.empty_is_point == r.spectrum_is_empty_point,
        "Θ=∅ ⇔ ∅∈Θ̂ ⇔ Θ̂={∅}");
  check(r.empty_in_theta, !r.empty_in_theta || r.spectrum_empty, "∅∈Θ ⇒ Θ̂=∅");
  if (r.minimum) {
    const Mask zero = bit(*r.minimum);
    r.minimum_in_theta = n.contains(zero);
    r.points_avoid_minimum =
        std::all_of(sp.masks.begin(), sp.masks.end(), [&](Mask m) { return (m & zero) == 0; });
    const bool lhs = r.minimum_in_theta && !r.empty_in_theta;
    check(lhs, lhs == r.full_is_point && r.full_is_point == r.spectrum_is_full,
          "{0}∈Θ∌∅ ⇔ P∈Θ̂ ⇔ Θ̂={P}");
    check(!r.minimum_in_theta, r.minimum_in_theta || r.points_avoid_minimum, "{0}∉Θ ⇒ Θ̂ ⊆ P(P∖{0})");
  }
  return r;
}

}  // namespace nearposet
