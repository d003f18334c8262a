#include "nearposet/spaces.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "nearposet/error.hpp"
#include "nearposet/proximity.hpp"

namespace nearposet {

namespace {

std::vector<std::string> generated_names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> points,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& sets,
                         FamilyRole role)
    : points_(std::move(points)), role_(role) {
  if (points_.size() > kMaxElements) throw InvalidInput("too many points");
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (p.empty() || !seen.insert(p).second) throw InvalidInput("point names must be distinct and non-empty");
  }
  std::vector<std::string> names;
  for (const auto& [name, members] : sets) {
    Mask m = 0;
    for (const auto& x : members) {
      auto it = std::find(points_.begin(), points_.end(), x);
      if (it == points_.end()) throw InvalidInput("set '" + name + "' names unknown point '" + x + "'");
      m |= bit(static_cast<std::size_t>(it - points_.begin()));
    }
    names.push_back(name);
    sets_.push_back(m);
  }
  std::vector<Mask> up(sets_.size(), 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i != j && sets_[i] == sets_[j]) {
        throw InvalidInput("sets '" + names[i] + "' and '" + names[j] + "' are equal");
      }
      if (is_subset(sets_[i], sets_[j])) up[i] |= bit(j);
    }
  }
  family_ = Poset(std::move(names), std::move(up));
  build();
}

FiniteSpace::FiniteSpace(std::size_t points, const std::vector<Mask>& sets, FamilyRole role)
    : FiniteSpace(generated_names("x", points), [&] {
        std::vector<std::pair<std::string, std::vector<std::string>>> named;
        for (std::size_t i = 0; i < sets.size(); ++i) {
          std::vector<std::string> members;
          for_each_bit(sets[i], [&](std::size_t x) { members.push_back("x" + std::to_string(x)); });
          named.emplace_back("s" + std::to_string(i), std::move(members));
        }
        return named;
      }(), role) {}

void FiniteSpace::build() {
  Bounds::require(points_.size(), default_bounds().powerset, "topology");
  // Finite intersections, including the empty one, then all unions.
  std::set<Mask> base{all_points()};
  for (Mask s : sets_) {
    std::vector<Mask> add;
    for (Mask b : base) add.push_back(b & s);
    base.insert(s);
    base.insert(add.begin(), add.end());
  }
  std::set<Mask> opens{0};
  for (Mask b : base) {
    std::vector<Mask> add;
    for (Mask o : opens) add.push_back(o | b);
    opens.insert(add.begin(), add.end());
  }
  topology_.assign(opens.begin(), opens.end());
  if (role_ == FamilyRole::basis && !is_basis()) {
    throw InvalidInput("family is not a basis: it must cover X and contain a member around each point of each pairwise intersection");
  }
}

Mask FiniteSpace::members_at(std::size_t x) const {
  Mask out = 0;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if ((sets_[i] >> x) & 1U) out |= bit(i);
  }
  return out;
}

Mask FiniteSpace::union_of(Mask members) const {
  Mask out = 0;
  for_each_bit(members, [&](std::size_t i) { out |= sets_[i]; });
  return out;
}

Mask FiniteSpace::meeting(Mask members, Mask q) const {
  Mask out = 0;
  for_each_bit(members, [&](std::size_t i) {
    if (sets_[i] & q) out |= bit(i);
  });
  return out;
}

bool FiniteSpace::is_open(Mask s) const { return std::binary_search(topology_.begin(), topology_.end(), s); }

Mask FiniteSpace::closure(Mask s) const {
  Mask outside = 0;
  for (Mask o : topology_) {
    if ((o & s) == 0) outside |= o;
  }
  return all_points() & ~outside;
}

bool FiniteSpace::is_basis() const {
  if (union_of(full_mask(sets_.size())) != all_points()) return false;
  for (Mask a : sets_) {
    for (Mask b : sets_) {
      Mask inter = a & b;
      bool ok = true;
      for_each_bit(inter, [&](std::size_t x) {
        if (!ok) return;
        ok = std::any_of(sets_.begin(), sets_.end(),
                         [&](Mask c) { return ((c >> x) & 1U) && is_subset(c, inter); });
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::string FiniteSpace::format_points(Mask s) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](std::size_t x) {
    if (!first) out += ",";
    out += points_[x];
    first = false;
  });
  return out + "}";
}

bool is_t1_family(const FiniteSpace& s) {
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    for (std::size_t y = 0; y < s.point_count(); ++y) {
      if (x == y) continue;
      const Mask ox = s.members_at(x) & ~s.members_at(y);
      const Mask oy = s.members_at(y) & ~s.members_at(x);
      if (ox == 0 || oy == 0) return false;
    }
  }
  return true;
}

bool is_td_family(const FiniteSpace& s) {
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    bool found = false;
    for (Mask o : s.sets()) {
      for (Mask m : s.sets()) {
        if ((o & ~m) == bit(x)) found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Mask> minimal_covers(const FiniteSpace& s) {
  Bounds::require(s.set_count(), default_bounds().powerset, "cover enumeration");
  std::vector<Mask> out;
  const Mask all = full_mask(s.set_count());
  for (Mask c = 0;; ++c) {
    if (s.is_cover(c)) {
      bool minimal = true;
      for_each_bit(c, [&](std::size_t i) {
        if (minimal && s.is_cover(c & ~bit(i))) minimal = false;
      });
      if (minimal) out.push_back(c);
    }
    if (c == all) break;
  }
  return out;
}

bool theta_in_covers(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  // Covers are closed upward under refinement, so generators decide.
  return std::all_of(n.generators().begin(), n.generators().end(), [&](Mask c) { return s.is_cover(c); });
}

bool is_cover_coinitial(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  const Poset& p = s.family();
  for (Mask m : minimal_covers(s)) {
    const bool refined = std::any_of(n.generators().begin(), n.generators().end(),
                                     [&](Mask c) { return p.refines(c, m); });
    if (!refined) return false;
  }
  return true;
}

NearnessInstance cover_family(const FiniteSpace& s, const CoverMode& mode) {
  const Poset& p = s.family();
  std::vector<Mask> minimal = minimal_covers(s);
  if (mode.kind == CoverMode::Kind::all) {
    return NearnessInstance(p, minimal, ThetaClosure::superset);
  }
  std::vector<Mask> covers;
  const Mask all = full_mask(s.set_count());
  for (Mask c = 0;; ++c) {
    if (s.is_cover(c)) covers.push_back(c);
    if (c == all) break;
  }
  std::mt19937_64 rng(mode.seed);
  std::shuffle(covers.begin(), covers.end(), rng);
  std::vector<Mask> chosen;
  std::vector<bool> used(covers.size(), false);
  std::vector<bool> refined(minimal.size(), false);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    bool helps = false;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (!refined[j] && p.refines(covers[i], minimal[j])) {
        refined[j] = true;
        helps = true;
      }
    }
    if (helps) {
      chosen.push_back(covers[i]);
      used[i] = true;
    }
  }
  std::size_t added = 0;
  for (std::size_t i = 0; i < covers.size() && added < mode.extra; ++i) {
    if (!used[i]) {
      chosen.push_back(covers[i]);
      ++added;
    }
  }
  NearnessInstance n(p, chosen, ThetaClosure::none);
  if (!is_cover_coinitial(s, n)) throw InvalidInput("cover sample is not coinitial");
  return n;
}

NearnessInstance space_instance(const FiniteSpace& s, std::vector<Mask> theta) {
  return NearnessInstance(s.family(), std::move(theta), ThetaClosure::none);
}

RoundTripReport roundtrip_t1(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  RoundTripReport r;
  r.t1 = is_t1_family(s);
  r.theta_in_covers = theta_in_covers(s, n);
  r.coinitial = is_cover_coinitial(s, n);
  const Spectrum& sp = n.spectrum();
  std::vector<std::size_t> image;
  bool all_points = true;
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    auto idx = sp.find(s.members_at(x));
    if (!idx) {
      all_points = false;
      r.notes.push_back("P_" + s.point_name(x) + " is not a spectrum point");
      continue;
    }
    image.push_back(*idx);
  }
  std::sort(image.begin(), image.end());
  const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  if (!injective) r.notes.push_back("distinct points share a neighbourhood family");
  r.bijective = all_points && injective && image.size() == sp.size();
  if (all_points && image.size() != sp.size()) r.notes.push_back("spectrum has points not of the form P_x");

  r.subbasis_matches = all_points;
  for (std::size_t x = 0; x < s.point_count() && all_points; ++x) {
    const std::size_t idx = *sp.find(s.members_at(x));
    for (std::size_t i = 0; i < s.set_count(); ++i) {
      if ((((s.set(i) >> x) & 1U) != 0) != sp.subbasic[i].test(idx)) r.subbasis_matches = false;
    }
  }
  r.order_matches = true;
  for (std::size_t i = 0; i < s.set_count(); ++i) {
    for (std::size_t j = 0; j < s.set_count(); ++j) {
      if (is_subset(s.set(i), s.set(j)) != sp.subbasic[i].is_subset_of(sp.subbasic[j])) {
        r.order_matches = false;
      }
    }
  }
  return r;
}

Mask star_concrete(const FiniteSpace& s, Mask c, std::size_t p) { return s.meeting(c, s.set(p)); }

bool is_star_coinitial(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  const Poset& p = s.family();
  const std::vector<Mask> minimal = minimal_covers(s);
  for (std::size_t i = 0; i < s.set_count(); ++i) {
    for (Mask m : minimal) {
      const bool refined = std::any_of(n.generators().begin(), n.generators().end(),
                                       [&](Mask c) { return p.refines(star_concrete(s, c, i), m); });
      if (!refined) return false;
    }
  }
  return true;
}

namespace {

// Each U(x, C) must contain x, and every open set around x must contain some
// U(x, C). Generators suffice since U grows with C under refinement.
template <class F>
bool neighbourhood_base(const FiniteSpace& s, const NearnessInstance& n, F&& u) {
  s.family().require_same(n.poset());
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    std::vector<Mask> base;
    for (Mask c : n.generators()) {
      Mask v = u(x, c);
      if (!((v >> x) & 1U)) return false;
      base.push_back(v);
    }
    for (Mask o : s.topology()) {
      if (!((o >> x) & 1U)) continue;
      if (std::none_of(base.begin(), base.end(), [&](Mask v) { return is_subset(v, o); })) return false;
    }
  }
  return true;
}

}  // namespace

bool is_compatible(const FiniteSpace& s, const NearnessInstance& n) {
  return neighbourhood_base(s, n, [&](std::size_t x, Mask c) { return s.union_of(c & s.members_at(x)); });
}

bool is_uniform_base(const FiniteSpace& s, const NearnessInstance& n) {
  return neighbourhood_base(s, n, [&](std::size_t x, Mask c) {
    return s.union_of(s.meeting(c, s.union_of(c & s.members_at(x))));
  });
}

bool is_locally_uniform(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  const auto& gens = n.generators();
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    for (Mask c : gens) {
      const Mask target = s.union_of(c & s.members_at(x));
      const bool found = std::any_of(gens.begin(), gens.end(), [&](Mask d) {
        return is_subset(s.union_of(s.meeting(d, s.union_of(d & s.members_at(x)))), target);
      });
      if (!found) return false;
    }
  }
  return true;
}

bool is_complete(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  Bounds::require(s.set_count(), n.bounds().double_set, "completeness");
  const BelowRelation r = below_relations(n);
  const Mask all = full_mask(s.set_count());
  for (Mask m = 0;; ++m) {
    if (n.is_cauchy(m) && is_regular_filter(r, m)) {
      bool converges = false;
      for (std::size_t x = 0; x < s.point_count(); ++x) {
        if (is_subset(s.members_at(x), m)) converges = true;
      }
      if (!converges) return false;
    }
    if (m == all) break;
  }
  return true;
}

bool near_equals_intersection(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  const NearTable& t = n.near_table();
  const Mask all = full_mask(s.set_count());
  for (Mask m = 0;; ++m) {
    Mask inter = s.all_points();
    for_each_bit(m, [&](std::size_t i) { inter &= s.set(i); });
    if (t.near(m) != (inter != 0)) return false;
    if (m == all) break;
  }
  return true;
}

bool restriction_equals_closure_covers(const FiniteSpace& s, const NearnessInstance& n) {
  s.family().require_same(n.poset());
  const Mask all = full_mask(s.set_count());
  for (Mask m = 0;; ++m) {
    Mask inter = s.all_points();
    for_each_bit(m, [&](std::size_t i) { inter &= s.set(i); });
    const Mask target = s.closure(inter);
    const RestrictedFamily rf(n, m);
    for (Mask c = 0;; ++c) {
      if (rf.contains(c) != is_subset(target, s.union_of(c))) return false;
      if (c == all) break;
    }
    if (m == all) break;
  }
  return true;
}

}  // namespace nearposet
