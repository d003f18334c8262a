#include "nearposet/proximity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "instance_cache.hpp"
#include "nearposet/error.hpp"

namespace nearposet {

bool NearTable::near(Mask s) const {
  return std::any_of(maximal.begin(), maximal.end(), [&](Mask a) { return is_subset(s, a); });
}

const NearTable& NearnessInstance::near_table() const {
  std::call_once(cache_->near_once, [&] {
    Bounds::require(size(), bounds_.double_set, "nearness");
    auto t = std::make_unique<NearTable>();
    t->pair_near.assign(size(), 0);
    for_each_downset(poset_, [&](Mask d) {
      if (in_theta_le(d)) return true;
      Mask a = 0;
      for (std::size_t s = 0; s < size(); ++s) {
        if (in_theta_le(d | bit(s))) a |= bit(s);
      }
      t->witnesses.emplace_back(d, a);
      return true;
    });
    for (const auto& [d, a] : t->witnesses) {
      const bool dominated = std::any_of(t->witnesses.begin(), t->witnesses.end(), [&](const auto& w) {
        return w.second != a && is_subset(a, w.second);
      });
      if (!dominated && std::find(t->maximal.begin(), t->maximal.end(), a) == t->maximal.end()) {
        t->maximal.push_back(a);
      }
    }
    for (Mask a : t->maximal) {
      t->dotted |= a;
      for_each_bit(a, [&](std::size_t p) { t->pair_near[p] |= a; });
    }
    cache_->near = std::move(t);
  });
  return *cache_->near;
}

NearResult is_near(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  for (const auto& [d, a] : n.near_table().witnesses) {
    if (is_subset(s.bits(), a)) return {true, n.poset().set(d)};
  }
  return {false, std::nullopt};
}

NearResult is_near_oracle(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  Bounds::require(n.size(), n.bounds().double_set, "nearness oracle");
  const Mask all = n.poset().all();
  for (Mask d = 0;; ++d) {
    if (!n.in_theta_le(d)) {
      bool ok = true;
      for_each_bit(s.bits(), [&](std::size_t x) {
        if (ok && !n.in_theta_le(d | bit(x))) ok = false;
      });
      if (ok) return {true, n.poset().set(d)};
    }
    if (d == all) break;
  }
  return {false, std::nullopt};
}

ElementSet dotted(const NearnessInstance& n) { return n.poset().set(n.near_table().dotted); }

bool is_weakly_admissible(const NearnessInstance& n) {
  const Poset& p = n.poset();
  const Mask dot = n.near_table().dotted;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.up(x) != p.all() && !((dot >> x) & 1U)) return false;
  }
  return true;
}

Mask star_mask(const NearnessInstance& n, Mask c, std::size_t p) {
  if (p >= n.size()) throw InvalidInput("element index out of range");
  return c & n.near_table().pair_near[p];
}

ElementSet star(const NearnessInstance& n, const ElementSet& c, std::size_t p) {
  c.check_owner(n.poset());
  return n.poset().set(star_mask(n, c.bits(), p));
}

namespace {

std::vector<Mask> star_masks(const NearnessInstance& n, std::size_t p) {
  std::vector<Mask> out;
  for (Mask c : n.generators()) {
    Mask s = star_mask(n, c, p);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<ElementSet> theta_star(const NearnessInstance& n, std::size_t p) {
  std::vector<ElementSet> out;
  for (Mask s : star_masks(n, p)) out.push_back(n.poset().set(s));
  return out;
}

NearnessInstance theta_star_instance(const NearnessInstance& n, std::size_t p) {
  return NearnessInstance(n.poset(), star_masks(n, p), ThetaClosure::none, n.bounds());
}

RestrictedFamily::RestrictedFamily(const NearnessInstance& n, Mask s) : n_(n), s_(s) {
  Bounds::require(n.size(), n.bounds().double_set, "restriction");
  const NearTable& t = n.near_table();
  const Mask all = n.poset().all();
  for (Mask f = 0;; ++f) {
    if (!t.near(f | s)) {
      bool minimal = true;
      for_each_bit(f, [&](std::size_t x) {
        if (minimal && !t.near((f & ~bit(x)) | s)) minimal = false;
      });
      if (minimal) f_gens_.push_back(f);
    }
    if (f == all) break;
  }
  auto hits_all = [&](Mask d) {
    return std::all_of(f_gens_.begin(), f_gens_.end(), [&](Mask g) { return (g & d) != 0; });
  };
  for (Mask d = 0;; ++d) {
    if (hits_all(d)) {
      bool minimal = true;
      for_each_bit(d, [&](std::size_t x) {
        if (minimal && hits_all(d & ~bit(x))) minimal = false;
      });
      if (minimal) transversals_.push_back(d);
    }
    if (d == all) break;
  }
}

bool RestrictedFamily::contains(Mask c) const {
  return std::all_of(transversals_.begin(), transversals_.end(),
                     [&](Mask d) { return n_.in_theta_le(c | d); });
}

std::vector<Mask> RestrictedFamily::members() const {
  std::vector<Mask> out;
  const Mask all = n_.poset().all();
  for (Mask c = 0;; ++c) {
    if (contains(c)) out.push_back(c);
    if (c == all) break;
  }
  return out;
}

std::vector<Mask> RestrictedFamily::minimal_members() const {
  std::vector<Mask> out;
  for (Mask c : members()) {
    bool minimal = true;
    for_each_bit(c, [&](std::size_t x) {
      if (minimal && contains(c & ~bit(x))) minimal = false;
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

NearnessInstance RestrictedFamily::as_instance() const {
  return NearnessInstance(n_.poset(), minimal_members(), ThetaClosure::refinement, n_.bounds());
}

RestrictedFamily restriction_family(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  return RestrictedFamily(n, s.bits());
}

std::vector<ElementSet> f_family(const NearnessInstance& n, const ElementSet& s) {
  std::vector<ElementSet> out;
  for (Mask f : restriction_family(n, s).f_generators()) out.push_back(n.poset().set(f));
  return out;
}

bool restriction_contains_oracle(const NearnessInstance& n, Mask s, Mask c) {
  Bounds::require(n.size(), n.bounds().double_set, "restriction oracle");
  const Poset& p = n.poset();
  const Mask all = p.all();
  std::vector<Mask> not_near;
  for (Mask f = 0;; ++f) {
    if (!is_near_oracle(n, p.set(f | s)).near) not_near.push_back(f);
    if (f == all) break;
  }
  for (Mask d = 0;; ++d) {
    const bool cauchy =
        std::all_of(not_near.begin(), not_near.end(), [&](Mask f) { return (f & d) != 0; });
    if (cauchy && !n.in_theta_le(c | d)) return false;
    if (d == all) break;
  }
  return true;
}

bool is_nearly_finite(const NearnessInstance&) {
  // Each member of Θp is finite and refines itself.
  return true;
}

bool is_non_degenerate(const NearnessInstance& n) {
  Bounds::require(n.size(), n.bounds().double_set, "non-degeneracy");
  const NearTable& t = n.near_table();
  const Spectrum& sp = n.spectrum();
  const Mask all = n.poset().all();
  for (Mask f = 0;; ++f) {
    if (t.near(f) && !sp.basic(f).any()) return false;
    if (f == all) break;
  }
  return true;
}

Mask BelowRelation::regular_part(Mask c) const {
  Mask out = 0;
  for_each_bit(c, [&](std::size_t x) { out |= below[x]; });
  return out;
}

bool BelowRelation::transitive() const {
  for (std::size_t p = 0; p < above.size(); ++p) {
    Mask reach = 0;
    for_each_bit(above[p], [&](std::size_t q) { reach |= above[q]; });
    if (!is_subset(reach, above[p])) return false;
  }
  return true;
}

BelowRelation below_relations(const NearnessInstance& n) {
  const Poset& p = n.poset();
  const std::size_t sz = p.size();
  BelowRelation r;
  r.above.assign(sz, 0);
  r.below.assign(sz, 0);
  r.lower_above.assign(sz, 0);
  // Generators suffice: a smaller cover has a smaller star.
  for (std::size_t x = 0; x < sz; ++x) {
    for (Mask c : n.generators()) {
      Mask bounds = p.all();
      for_each_bit(star_mask(n, c, x), [&](std::size_t y) { bounds &= p.up(y); });
      r.above[x] |= bounds;
    }
  }
  for (std::size_t x = 0; x < sz; ++x) {
    for_each_bit(r.above[x], [&](std::size_t q) { r.below[q] |= bit(x); });
  }
  for (std::size_t x = 0; x < sz; ++x) {
    for (std::size_t q = 0; q < sz; ++q) {
      if (is_subset(r.below[x], r.below[q])) r.lower_above[x] |= bit(q);
    }
  }
  return r;
}

bool is_linked(const NearnessInstance& n, const ElementSet& s) {
  s.check_owner(n.poset());
  const NearTable& t = n.near_table();
  bool ok = true;
  for_each_bit(s.bits(), [&](std::size_t x) {
    if (!is_subset(s.bits(), t.pair_near[x])) ok = false;
  });
  return ok;
}

bool is_regular_set(const BelowRelation& r, Mask s) {
  bool ok = true;
  for_each_bit(s, [&](std::size_t x) {
    if ((r.below[x] & s) == 0) ok = false;
  });
  return ok;
}

bool is_regular_filter(const BelowRelation& r, Mask s) {
  if (s == 0) return false;
  bool closed = true;
  for_each_bit(s, [&](std::size_t x) {
    if (!is_subset(r.above[x], s)) closed = false;
  });
  if (!closed) return false;
  // Intersections of the sets below each element of a finite subset, cut
  // down to s; directedness fails as soon as one becomes empty.
  std::unordered_set<Mask> seen{s};
  std::deque<Mask> queue{s};
  while (!queue.empty()) {
    Mask m = queue.front();
    queue.pop_front();
    bool ok = true;
    for_each_bit(s, [&](std::size_t x) {
      if (!ok) return;
      Mask next = m & r.below[x];
      if (next == 0) {
        ok = false;
      } else if (seen.insert(next).second) {
        queue.push_back(next);
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool is_star_regular(const NearnessInstance& n) {
  const BelowRelation r = below_relations(n);
  const auto& gens = n.generators();
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (Mask c : gens) {
      const Mask target = r.regular_part(c);
      const bool found = std::any_of(gens.begin(), gens.end(),
                                     [&](Mask d) { return is_subset(star_mask(n, d, p), target); });
      if (!found) return false;
    }
  }
  return true;
}

NearnessInstance Regularisation::instance(const NearnessInstance& base) const {
  return NearnessInstance(base.poset(), family, ThetaClosure::none, base.bounds());
}

Regularisation regularise(const NearnessInstance& n, Priming priming) {
  Regularisation out;
  std::vector<Mask> current;
  n.for_each_member([&](Mask c) {
    current.push_back(c);
    return true;
  });
  const BelowRelation original = below_relations(n);
  std::map<std::vector<Mask>, std::size_t> seen;
  bool first = true;
  while (true) {
    std::vector<Mask> key = current;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = seen.emplace(key, out.stages.size());
    if (!inserted) {
      out.cycle_start = it->second;
      break;
    }
    out.stages.push_back(current);
    BelowRelation r = original;
    if (priming == Priming::stage_local && !first) {
      r = below_relations(NearnessInstance(n.poset(), current, ThetaClosure::none, n.bounds()));
    }
    first = false;
    std::vector<Mask> next;
    for (Mask c : current) {
      Mask d = r.regular_part(c);
      if (std::find(next.begin(), next.end(), d) == next.end()) next.push_back(d);
    }
    current = std::move(next);
  }
  for (const auto& stage : out.stages) {
    for (Mask c : stage) {
      if (std::find(out.family.begin(), out.family.end(), c) == out.family.end()) {
        out.family.push_back(c);
      }
    }
  }
  return out;
}

std::vector<Mask> regular_cauchy_filters(const NearnessInstance& n, const BelowRelation& r) {
  std::vector<Mask> out;
  for_each_submask(n.near_table().dotted, [&](Mask s) {
    if (n.is_cauchy(s) && is_regular_filter(r, s)) out.push_back(s);
  });
  return out;
}

namespace {

struct ReplacementTables {
  std::size_t universe;
  std::vector<PointSet> up;      // up[G] = {H : G ≤^F H}
  std::vector<PointSet> down;    // down[G] = {H : H ≤^F G}
  std::vector<PointSet> hits;    // hits[C] = {G : C ∩ G ≠ ∅}
  std::vector<Mask> outside;     // C ⊆ P not in the family
};

ReplacementTables replacement_tables(const NearnessInstance& n, bool literal) {
  const std::size_t sz = n.size();
  const std::size_t u = std::size_t{1} << sz;
  ReplacementTables t;
  t.universe = u;
  std::vector<PointSet> section(sz, PointSet(u));  // Θ^{≤f}
  for (std::size_t f = 0; f < sz; ++f) {
    for (std::size_t r = 0; r < u; ++r) {
      if (n.in_theta_le(static_cast<Mask>(r) | bit(f))) section[f].set(r);
    }
  }
  std::vector<PointSet> inter(u, PointSet(u));
  for (std::size_t g = 0; g < u; ++g) {
    inter[g].set();
    for_each_bit(g, [&](std::size_t f) { inter[g] &= section[f]; });
  }
  t.up.assign(u, PointSet(u));
  t.down.assign(u, PointSet(u));
  for (std::size_t g = 0; g < u; ++g) {
    for (std::size_t h = 0; h < u; ++h) {
      if (inter[g].is_subset_of(inter[h])) {
        t.up[g].set(h);
        t.down[h].set(g);
      }
    }
  }
  t.hits.assign(u, PointSet(u));
  for (std::size_t c = 0; c < u; ++c) {
    for (std::size_t g = 0; g < u; ++g) {
      if (c & g) t.hits[c].set(g);
    }
    const bool member = literal ? n.contains(c) : n.in_theta_le(c);
    if (!member) t.outside.push_back(c);
  }
  return t;
}

// Φ ∈ Θ^F iff every Φ-Cauchy C ⊆ P is in the family.
bool in_replacement(const ReplacementTables& t, const PointSet& phi) {
  return std::none_of(t.outside.begin(), t.outside.end(),
                      [&](Mask c) { return phi.is_subset_of(t.hits[c]); });
}

std::vector<PointSet> expected_points(const NearnessInstance& n, std::size_t u) {
  std::vector<PointSet> out;
  for (Mask r : n.spectrum().masks) {
    PointSet fr(u);
    for_each_submask(r, [&](Mask g) { fr.set(g); });
    out.push_back(fr);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DirectedReplacement directed_replacement(const NearnessInstance& n, bool literal) {
  Bounds::require(n.size(), n.bounds().replacement, "directed replacement");
  const ReplacementTables t = replacement_tables(n, literal);
  const std::size_t u = t.universe;
  DirectedReplacement out;
  out.universe = u;
  // Cauchy up-sets are exactly the up-sets containing F(P \ C) for some C
  // outside the family; the points are the minimal ones.
  std::vector<PointSet> candidates;
  for (Mask c : t.outside) {
    PointSet cand(u);
    for (std::size_t g = 0; g < u; ++g) {
      if ((g & c) == 0) cand |= t.up[g];
    }
    if (std::find(candidates.begin(), candidates.end(), cand) == candidates.end()) {
      candidates.push_back(cand);
    }
  }
  for (const auto& a : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const PointSet& b) {
      return b != a && b.is_subset_of(a);
    });
    if (minimal) out.points.push_back(a);
  }
  std::sort(out.points.begin(), out.points.end());
  for (const auto& pt : out.points) {
    for (std::size_t s = pt.find_first(); s != PointSet::npos; s = pt.find_next(s)) {
      PointSet phi = ~pt | (pt & t.down[s]);
      if (!in_replacement(t, phi)) out.all_round = false;
    }
  }
  out.expected = expected_points(n, u);
  return out;
}

std::vector<PointSet> directed_replacement_oracle(const NearnessInstance& n, bool literal) {
  Bounds::require(n.size(), 3, "directed replacement oracle");
  const ReplacementTables t = replacement_tables(n, literal);
  const std::size_t u = t.universe;
  const Mask fam_all = full_mask(u);
  auto to_set = [&](Mask m) {
    PointSet s(u);
    for_each_bit(m, [&](std::size_t g) { s.set(g); });
    return s;
  };
  auto leq = [&](std::size_t g, std::size_t h) { return t.up[g].test(h); };
  std::vector<Mask> members;
  for (Mask phi = 0;; ++phi) {
    bool ok = true;
    for (Mask c = 0; c < u && ok; ++c) {
      bool cauchy = true;
      for_each_bit(phi, [&](std::size_t g) {
        if ((c & g) == 0) cauchy = false;
      });
      const bool member = literal ? n.contains(c) : n.in_theta_le(c);
      if (cauchy && !member) ok = false;
    }
    if (ok) members.push_back(phi);
    if (phi == fam_all) break;
  }
  std::vector<PointSet> out;
  for (Mask up = 0;; ++up) {
    bool upset = true;
    for_each_bit(up, [&](std::size_t g) {
      for (std::size_t h = 0; h < u; ++h) {
        if (leq(g, h) && !((up >> h) & 1U)) upset = false;
      }
    });
    bool cauchy = upset && std::all_of(members.begin(), members.end(), [&](Mask phi) { return (phi & up) != 0; });
    bool round = cauchy;
    if (round) {
      for_each_bit(up, [&](std::size_t s) {
        const bool found = std::any_of(members.begin(), members.end(), [&](Mask phi) {
          bool below = true;
          for_each_bit(phi & up, [&](std::size_t g) {
            if (!leq(g, s)) below = false;
          });
          return below;
        });
        if (!found) round = false;
      });
    }
    if (round) out.push_back(to_set(up));
    if (up == fam_all) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nearposet
