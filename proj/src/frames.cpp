#include "nearposet/frames.hpp"

#include "nearposet/admissibility.hpp"
#include "nearposet/error.hpp"

namespace nearposet {

FiniteFrame::FiniteFrame(Poset p) : poset_(std::move(p)) {
  const std::size_t n = poset_.size();
  if (n == 0) throw InvalidInput("a frame needs at least one element");
  auto lo = poset_.minimum();
  auto hi = poset_.maximum();
  if (!lo || !hi) throw InvalidInput("order has no least or greatest element");
  bottom_ = *lo;
  top_ = *hi;
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto m = poset_.meet(bit(a) | bit(b));
      auto j = poset_.join(bit(a) | bit(b));
      if (!m || !j) {
        throw InvalidInput("order is not a lattice: " + poset_.name(a) + " and " + poset_.name(b) +
                           " lack a meet or join");
      }
      meet_[a * n + b] = *m;
      join_[a * n + b] = *j;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          throw InvalidInput("lattice is not distributive at " + poset_.name(a) + ", " + poset_.name(b) +
                             ", " + poset_.name(c));
        }
      }
    }
  }
  implies_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Mask candidates = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (poset_.leq(meet(r, a), b)) candidates |= bit(r);
      }
      implies_[a * n + b] = join_of(candidates);
    }
  }
}

std::size_t FiniteFrame::join_of(Mask s) const {
  std::size_t out = bottom_;
  for_each_bit(s, [&](std::size_t x) { out = join(out, x); });
  return out;
}

Mask FiniteFrame::meet_closure(Mask s) const {
  Mask out = s | bit(top_);
  bool grew = true;
  while (grew) {
    grew = false;
    Mask add = 0;
    for_each_bit(out, [&](std::size_t a) {
      for_each_bit(out, [&](std::size_t b) { add |= bit(meet(a, b)); });
    });
    if (!is_subset(add, out)) {
      out |= add;
      grew = true;
    }
  }
  return out;
}

bool FiniteFrame::is_sublocale(Mask s) const {
  if (meet_closure(s) != s) return false;
  bool ok = true;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_bit(s, [&](std::size_t x) {
      if (!((s >> heyting(a, x)) & 1U)) ok = false;
    });
  }
  return ok;
}

ElementSet closed_sublocale(const FiniteFrame& f, std::size_t p) {
  return f.poset().set(f.poset().up(p));
}

ElementSet open_sublocale(const FiniteFrame& f, std::size_t p) {
  Mask out = 0;
  for (std::size_t q = 0; q < f.size(); ++q) out |= bit(f.heyting(p, q));
  return f.poset().set(out);
}

ElementSet sublocale_join(const FiniteFrame& f, const std::vector<ElementSet>& parts) {
  Mask u = 0;
  for (const auto& s : parts) {
    s.check_owner(f.poset());
    u |= s.bits();
  }
  return f.poset().set(f.meet_closure(u));
}

bool is_frame_cover(const FiniteFrame& f, Mask c) { return f.join_of(c) == f.top(); }

PPEquivReport pp_equiv_check(const FiniteFrame& f, const NearnessInstance& n) {
  f.poset().require_same(n.poset());
  const Poset& p = f.poset();
  PPEquivReport r;
  r.theta_upset = is_theta_upset(n);
  r.picado_pultr = is_picado_pultr_admissible(n);
  r.theta_in_covers = true;
  n.for_each_member([&](Mask c) {
    if (!is_order_cover(p, c)) r.theta_in_covers = false;
    return r.theta_in_covers;
  });
  r.opens_match = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    Mask closed_union = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
      bool in_q = false;
      n.for_each_member([&](Mask c) {
        if (is_subset(c & ~p.down(q), p.down(x))) in_q = true;
        return !in_q;
      });
      if (in_q) closed_union |= p.up(q);
    }
    const Mask lhs = open_sublocale(f, x).bits();
    const Mask rhs = f.meet_closure(closed_union);
    if (lhs != rhs) {
      r.opens_match = false;
      r.mismatches.push_back("o(" + p.name(x) + ")=" + p.format(lhs) + " but the closed join is " +
                             p.format(rhs));
    }
  }
  return r;
}

}  // namespace nearposet
