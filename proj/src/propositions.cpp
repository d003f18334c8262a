#include "nearposet/propositions.hpp"

#include <algorithm>
#include <sstream>

#include "nearposet/error.hpp"

namespace nearposet {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "FAIL";
    case Outcome::skipped:
      return "skipped";
  }
  return "?";
}

CheckContext::CheckContext(NearnessInstance n, CheckOptions options)
    : n_(std::move(n)), options_(options) {}

const BelowRelation& CheckContext::below() {
  if (!below_) below_ = below_relations(n_);
  return *below_;
}

const AdmissibilityReport& CheckContext::report() {
  if (!report_) report_ = admissibility_report(n_);
  return *report_;
}

bool CheckContext::directed() {
  if (!directed_) directed_ = is_theta_directed(n_);
  return *directed_;
}

bool CheckContext::upset() {
  if (!upset_) upset_ = is_theta_upset(n_);
  return *upset_;
}

bool CheckContext::filter() { return upset() && directed(); }

bool CheckContext::admissible() {
  if (!admissible_) admissible_ = is_admissible(n_, EmptyJoinReading::literal);
  return *admissible_;
}

bool CheckContext::star_regular() {
  if (!star_regular_) star_regular_ = is_star_regular(n_);
  return *star_regular_;
}

const RestrictedFamily& CheckContext::restriction(Mask s) {
  auto it = restrictions_.find(s);
  if (it == restrictions_.end()) {
    it = restrictions_.emplace(s, std::make_unique<RestrictedFamily>(n_, s)).first;
  }
  return *it->second;
}

namespace {

CheckResult pass() { return {"", Outcome::pass, ""}; }
CheckResult fail(std::string detail) { return {"", Outcome::fail, std::move(detail)}; }
CheckResult skip(std::string hypothesis) { return {"", Outcome::skipped, "hypothesis: " + hypothesis}; }

std::string fmt_points(const Poset& p, const std::vector<Mask>& pts) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += p.format(pts[i]);
  }
  return out + "]";
}

const std::string& el(const Poset& p, std::size_t i) { return p.name(i); }

void for_each_subset(Mask all, const std::function<bool(Mask)>& f) {
  for (Mask s = 0;; ++s) {
    if (!f(s)) return;
    if (s == all) return;
  }
}

bool sorted_includes(const std::vector<Mask>& big, const std::vector<Mask>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Points in the closure of Θ̂_S: the smallest basic neighbourhood of R is
// Θ̂_R, so R is in the closure iff R ∪ S lies inside some point.
std::vector<Mask> closure_of_basic(const Spectrum& sp, Mask s) {
  std::vector<Mask> out;
  for (Mask r : sp.masks) {
    const bool hit = std::any_of(sp.masks.begin(), sp.masks.end(),
                                 [&](Mask q) { return is_subset(r | s, q); });
    if (hit) out.push_back(r);
  }
  return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool every_point_meets(const Spectrum& sp, Mask c) {
  return std::all_of(sp.masks.begin(), sp.masks.end(), [&](Mask r) { return (r & c) != 0; });
}

bool basic_included(const Spectrum& sp, std::size_t p, std::size_t q) {
  return sp.subbasic[p].is_subset_of(sp.subbasic[q]);
}

// Cauchy and round evaluated on the generators; exact for up-sets under
// every closure kind.
bool cauchy_on_generators(const NearnessInstance& n, Mask r) {
  return std::all_of(n.generators().begin(), n.generators().end(), [&](Mask c) { return (c & r) != 0; });
}

bool round_on_generators(const NearnessInstance& n, Mask r) {
  bool ok = true;
  for_each_bit(r, [&](std::size_t s) {
    if (ok && !std::any_of(n.generators().begin(), n.generators().end(),
                           [&](Mask c) { return is_subset(c & r, n.poset().down(s)); })) {
      ok = false;
    }
  });
  return ok;
}

bool dir_lower_bound(const Poset& p, Mask s) {
  // Pairwise lower bounds inside s and s non-empty.
  if (s == 0) return false;
  bool ok = true;
  for_each_bit(s, [&](std::size_t a) {
    for_each_bit(s, [&](std::size_t b) {
      if (ok && (p.down(a) & p.down(b) & s) == 0) ok = false;
    });
  });
  return ok;
}

// ---- spectrum ------------------------------------------------------------

CheckResult spectrum_matches_minimal_cauchy(CheckContext& ctx) {
  const auto& sp = ctx.spectrum();
  std::vector<Mask> oracle;
  for (const ElementSet& e : spectrum_oracle(ctx.instance())) oracle.push_back(e.bits());
  oracle = sorted(oracle);
  if (oracle != sp.masks) {
    return fail("round Cauchy up-sets " + fmt_points(ctx.poset(), sp.masks) + " but minimal Cauchy sets " +
                fmt_points(ctx.poset(), oracle));
  }
  return pass();
}

CheckResult points_are_round_cauchy_upsets(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  for (Mask r : sp.masks) {
    if (!n.poset().is_upset(r) || !cauchy_on_generators(n, r) || !round_on_generators(n, r)) {
      return fail("point " + n.format(r) + " is not a round Cauchy up-set");
    }
  }
  return pass();
}

CheckResult points_are_minimal_cauchy_upsets(CheckContext& ctx) {
  const auto& n = ctx.instance();
  std::vector<Mask> cauchy;
  for_each_upset(n.poset(), [&](Mask r) {
    if (cauchy_on_generators(n, r)) cauchy.push_back(r);
    return true;
  });
  std::vector<Mask> minimal;
  for (Mask r : cauchy) {
    const bool has_smaller =
        std::any_of(cauchy.begin(), cauchy.end(), [&](Mask q) { return q != r && is_subset(q, r); });
    if (!has_smaller) minimal.push_back(r);
  }
  minimal = sorted(minimal);
  if (minimal != ctx.spectrum().masks) {
    return fail("minimal Cauchy up-sets " + fmt_points(n.poset(), minimal) + " differ from the spectrum " +
                fmt_points(n.poset(), ctx.spectrum().masks));
  }
  return pass();
}

CheckResult upset_family_gives_upset_points(CheckContext& ctx) {
  if (!ctx.upset()) return skip("family is not an up-set");
  const auto& n = ctx.instance();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask r) {
    if (n.is_cauchy(r) && n.is_round(r) && !n.poset().is_upset(r)) {
      bad = n.format(r);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("round Cauchy set " + bad + " is not an up-set");
  return pass();
}

CheckResult directed_family_gives_directed_points(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  for (Mask r : ctx.spectrum().masks) {
    if (!dir_lower_bound(ctx.poset(), r)) return fail("point " + ctx.poset().format(r) + " is not directed");
  }
  return pass();
}

CheckResult filter_family_gives_filter_points(CheckContext& ctx) {
  if (!ctx.filter()) return skip("family is not a filter");
  const auto& n = ctx.instance();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask r) {
    if (n.is_cauchy(r) && n.is_round(r) && !is_filter(n.poset(), n.poset().set(r))) {
      bad = n.format(r);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("round Cauchy set " + bad + " is not a filter");
  return pass();
}

CheckResult spectrum_is_t1(CheckContext& ctx) {
  const auto& m = ctx.spectrum().masks;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && is_subset(m[i], m[j])) {
        return fail("points " + ctx.poset().format(m[i]) + " and " + ctx.poset().format(m[j]) +
                    " are not separated");
      }
    }
  }
  return pass();
}

CheckResult minimum_avoidance(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto zero = n.poset().minimum();
  if (!zero) return skip("no minimum");
  const bool lhs = n.contains(0) || n.contains(bit(*zero));
  const bool whole_round = n.is_round(n.poset().all());
  bool some_round = false;
  for_each_upset(n.poset(), [&](Mask r) {
    if (((r >> *zero) & 1U) && n.is_round(r)) some_round = true;
    return !some_round;
  });
  if (lhs != whole_round || whole_round != some_round) {
    std::ostringstream os;
    os << "empty or {0} listed: " << lhs << ", P round: " << whole_round << ", round up-set with 0: " << some_round;
    return fail(os.str());
  }
  if (!lhs) {
    for (Mask r : ctx.spectrum().masks) {
      if ((r >> *zero) & 1U) return fail("point " + n.format(r) + " contains the minimum");
    }
  }
  return pass();
}

CheckResult cauchy_round_complements(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const Mask all = n.poset().all();
  std::string bad;
  for_each_upset(n.poset(), [&](Mask r) {
    const bool cauchy = cauchy_on_generators(n, r);
    const bool cauchy_c = !n.in_theta_le(all & ~r);
    bool round_c = true;
    for_each_bit(r, [&](std::size_t x) {
      if (!n.in_theta_le((all & ~r) | bit(x))) round_c = false;
    });
    if (cauchy != cauchy_c || round_on_generators(n, r) != round_c) {
      bad = n.format(r);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("complement forms disagree on " + bad);
  return pass();
}

CheckResult order_implies_spectral_order(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (std::size_t q = 0; q < n.size(); ++q) {
      const bool le = n.poset().leq(p, q);
      const bool le_theta = leq_theta(n, p, q, OrderFamily::theta_le);
      const bool inc = basic_included(sp, p, q);
      if ((le && !le_theta) || (le_theta && !inc)) {
        return fail("pair (" + el(n.poset(), p) + ", " + el(n.poset(), q) + ")");
      }
    }
  }
  return pass();
}

CheckResult degenerate_equations(CheckContext& ctx) {
  const DegenerateReport r = classify_degenerate(ctx.instance());
  if (!r.consistent()) {
    std::string d;
    for (const auto& v : r.violated) d += (d.empty() ? "" : "; ") + v;
    return fail(d);
  }
  return pass();
}

// ---- compactness -------------------------------------------------------

CheckResult compact_cover_criterion(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask c) {
    if (every_point_meets(sp, c) != n.in_theta_le(c)) {
      bad = n.format(c);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("cover test disagrees on " + bad);
  return pass();
}

CheckResult compact_order_criterion(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (std::size_t q = 0; q < n.size(); ++q) {
      if (basic_included(sp, p, q) != leq_theta(n, p, q, OrderFamily::theta_le)) {
        return fail("pair (" + el(n.poset(), p) + ", " + el(n.poset(), q) + ")");
      }
    }
  }
  return pass();
}

CheckResult order_scan_agrees(CheckContext& ctx) {
  const auto& n = ctx.instance();
  for (OrderFamily fam : {OrderFamily::theta, OrderFamily::theta_le}) {
    for (std::size_t p = 0; p < n.size(); ++p) {
      for (std::size_t q = 0; q < n.size(); ++q) {
        if (leq_theta(n, p, q, fam) != leq_theta_oracle(n, p, q, fam)) {
          return fail("pair (" + el(n.poset(), p) + ", " + el(n.poset(), q) + ")");
        }
      }
    }
  }
  return pass();
}

CheckResult restriction_empty_criteria(CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (n.theta_empty()) return skip("family is empty");
  const auto& sp = ctx.spectrum();
  const RestrictedFamily& r0 = ctx.restriction(0);
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask c) {
    if (every_point_meets(sp, c) != r0.contains(c)) {
      bad = "cover test disagrees on " + n.format(c);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail(bad);
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (std::size_t q = 0; q < n.size(); ++q) {
      if (basic_included(sp, p, q) != leq_theta(n, p, q, OrderFamily::restriction_empty)) {
        return fail("pair (" + el(n.poset(), p) + ", " + el(n.poset(), q) + ")");
      }
    }
  }
  return pass();
}

// ---- Wallman ---------------------------------------------------------------

CheckResult wallman_three_forms(CheckContext& ctx) {
  const WallmanForms f = wallman_equivalent_forms(ctx.instance());
  if (!f.agree()) {
    std::ostringstream os;
    os << "wallman " << f.wallman << ", subset-closed form " << f.subset_closed_faithful
       << ", refinement-closed form " << f.refinement_closed_faithful;
    return fail(os.str());
  }
  return pass();
}

CheckResult subset_closed_is_order_closed(CheckContext& ctx) {
  if (!is_theta_subset_closed(ctx.instance())) return skip("family is not closed under supersets");
  if (!is_theta_leq_theta_closed(ctx.instance())) return fail("not closed under the induced refinement");
  return pass();
}

CheckResult wallman_implies_weakly_admissible(CheckContext& ctx) {
  const auto& r = ctx.report();
  if (!r.wallman) return skip("not Wallman admissible");
  if (!r.weakly_admissible) return fail("Wallman admissible but not weakly admissible");
  return pass();
}

CheckResult picado_pultr_covers(CheckContext& ctx) {
  const auto& r = ctx.report();
  if (!r.picado_pultr) return skip("not Picado-Pultr admissible");
  if (!r.theta_in_order_covers) return fail("a member is not an order cover");
  return pass();
}

CheckResult picado_pultr_implies_wallman(CheckContext& ctx) {
  if (!ctx.upset()) return skip("family is not an up-set");
  const auto& r = ctx.report();
  if (!r.picado_pultr) return skip("not Picado-Pultr admissible");
  if (!r.wallman) return fail("Picado-Pultr admissible up-set that is not Wallman admissible");
  return pass();
}

CheckResult wallman_filter_covers(CheckContext& ctx) {
  if (!ctx.filter()) return skip("family is not a filter");
  const auto& r = ctx.report();
  if (!r.wallman) return skip("not Wallman admissible");
  if (!r.theta_in_order_covers) return fail("a member is not an order cover");
  return pass();
}

// ---- near subsets ------------------------------------------------------

CheckResult near_oracle_agrees(CheckContext& ctx) {
  const auto& n = ctx.instance();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask s) {
    const ElementSet e = n.poset().set(s);
    const NearResult fast = is_near(n, e);
    const NearResult slow = is_near_oracle(n, e);
    bool ok = fast.near == slow.near;
    if (ok && fast.witness) {
      const Mask d = fast.witness->bits();
      ok = !n.in_theta_le(d);
      for_each_bit(s, [&](std::size_t x) {
        if (!n.in_theta_le(d | bit(x))) ok = false;
      });
    }
    if (!ok) {
      bad = n.format(s);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("near search disagrees on " + bad);
  return pass();
}

CheckResult near_iff_inside_point(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  const auto& t = ctx.near();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask s) {
    const bool inside = std::any_of(sp.masks.begin(), sp.masks.end(), [&](Mask r) { return is_subset(s, r); });
    if (inside != t.near(s)) {
      bad = n.format(s);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("near but in no point, or the reverse: " + bad);
  return pass();
}

CheckResult non_degenerate(CheckContext& ctx) {
  if (!is_non_degenerate(ctx.instance())) return fail("a near finite set has no point containing it");
  return pass();
}

CheckResult minimum_near(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto zero = n.poset().minimum();
  if (!zero) return skip("no minimum");
  const bool near0 = ctx.near().near(bit(*zero));
  const bool rhs = n.contains(bit(*zero)) && !n.contains(0);
  if (near0 != rhs) return fail(near0 ? "{0} near without {0} listed" : "{0} listed but not near");
  return pass();
}

CheckResult degenerate_weak_admissibility(CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!(n.theta_empty() || n.contains(0))) return skip("family is non-empty and avoids the empty set");
  if (!ctx.report().weakly_admissible) return skip("not weakly admissible");
  if (n.size() > 1) return fail("weakly admissible with more than one element");
  return pass();
}

CheckResult near_bounded_below(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  const auto& n = ctx.instance();
  const Poset& p = n.poset();
  const auto& t = ctx.near();
  const auto zero = p.minimum();
  const bool zero_near = zero && t.near(bit(*zero));
  const bool weak = ctx.report().weakly_admissible;
  std::string bad;
  for_each_subset(p.all(), [&](Mask f) {
    Mask lower = p.all();
    for_each_bit(f, [&](std::size_t x) { lower &= p.down(x); });
    Mask candidates = lower;
    if (zero && !zero_near) candidates &= ~bit(*zero);
    const bool near = t.near(f);
    if (near && candidates == 0) {
      bad = "near set " + n.format(f) + " has no admissible lower bound";
      return false;
    }
    if (weak && near != ((lower & t.dotted) != 0)) {
      bad = "bounded-below form disagrees on " + n.format(f);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail(bad);
  return pass();
}

// ---- restrictions ------------------------------------------------------

CheckResult restriction_oracle_agrees(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const Mask all = n.poset().all();
  std::string bad;
  for (std::size_t i = 0; i <= n.size() && bad.empty(); ++i) {
    const Mask s = i == n.size() ? 0 : bit(i);
    const RestrictedFamily& r = ctx.restriction(s);
    for_each_subset(all, [&](Mask c) {
      if (r.contains(c) != restriction_contains_oracle(n, s, c)) {
        bad = "restriction to " + n.format(s) + " disagrees on " + n.format(c);
        return false;
      }
      return true;
    });
  }
  if (!bad.empty()) return fail(bad);
  return pass();
}

CheckResult cover_patching(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const Mask all = n.poset().all();
  const RestrictedFamily& r0 = ctx.restriction(0);
  std::string bad;
  if (n.theta_empty()) {
    // The hypothesis is necessary: the empty family restricts to nothing at
    // the empty set and to everything at each element.
    for_each_subset(all, [&](Mask c) {
      if (r0.contains(c)) {
        bad = "empty family: restriction to {} contains " + n.format(c);
        return false;
      }
      for (std::size_t p = 0; p < n.size(); ++p) {
        if (!ctx.restriction(bit(p)).contains(c)) {
          bad = "empty family: restriction to " + el(n.poset(), p) + " misses " + n.format(c);
          return false;
        }
      }
      return true;
    });
  } else {
    for_each_subset(all, [&](Mask c) {
      bool every = true;
      for (std::size_t p = 0; p < n.size() && every; ++p) every = ctx.restriction(bit(p)).contains(c);
      if (every != r0.contains(c)) {
        bad = "patching fails on " + n.format(c);
        return false;
      }
      return true;
    });
  }
  if (!bad.empty()) return fail(bad);
  return pass();
}

CheckResult stars_inside_restrictions(CheckContext& ctx) {
  const auto& n = ctx.instance();
  for (std::size_t p = 0; p < n.size(); ++p) {
    const RestrictedFamily& r = ctx.restriction(bit(p));
    for (Mask c : n.generators()) {
      const Mask cp = star_mask(n, c, p);
      if (!r.contains(cp)) {
        return fail("star of " + n.format(c) + " at " + el(n.poset(), p) + " is " + n.format(cp) +
                    ", outside the restriction");
      }
    }
  }
  return pass();
}

CheckResult closure_restriction_inclusions(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask s) {
    const std::vector<Mask> cl = closure_of_basic(sp, s);
    const NearnessInstance restricted = ctx.restriction(s).as_instance();
    const std::vector<Mask>& mid = restricted.spectrum().masks;
    if (!sorted_includes(mid, cl) || !sorted_includes(sp.masks, mid)) {
      bad = "at " + n.format(s) + ": closure " + fmt_points(n.poset(), cl) + ", restricted spectrum " +
            fmt_points(n.poset(), mid);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail(bad);
  return pass();
}

CheckResult closure_restriction_equality(CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!is_non_degenerate(n)) return skip("degenerate family");
  const auto& sp = ctx.spectrum();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask f) {
    const std::vector<Mask> cl = closure_of_basic(sp, f);
    const RestrictedFamily& r = ctx.restriction(f);
    if (r.as_instance().spectrum().masks != cl) {
      bad = "restricted spectrum differs from the closure at " + n.format(f);
      return false;
    }
    for (Mask d : r.minimal_cauchy()) {
      for (Mask pt : sp.masks) {
        const bool in_cl = std::binary_search(cl.begin(), cl.end(), pt);
        if (!in_cl && (pt & d) == 0) {
          bad = "point " + n.format(pt) + " outside the closure at " + n.format(f) + " avoids " + n.format(d);
          return false;
        }
      }
    }
    return true;
  });
  if (!bad.empty()) return fail(bad);
  return pass();
}

CheckResult star_closure_inclusions(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const auto& sp = ctx.spectrum();
  const bool equality = ctx.directed() && is_non_degenerate(n);
  for (std::size_t p = 0; p < n.size(); ++p) {
    const std::vector<Mask> cl = closure_of_basic(sp, bit(p));
    const NearnessInstance starred = theta_star_instance(n, p);
    const std::vector<Mask>& mid = starred.spectrum().masks;
    if (!sorted_includes(mid, cl) || !sorted_includes(sp.masks, mid) || (equality && mid != cl)) {
      return fail("at " + el(n.poset(), p) + ": closure " + fmt_points(n.poset(), cl) + ", star spectrum " +
                  fmt_points(n.poset(), mid));
    }
  }
  return pass();
}

CheckResult star_nonempty(CheckContext& ctx) {
  if (!ctx.filter()) return skip("family is not a filter");
  if (!ctx.report().weakly_admissible) return skip("not weakly admissible");
  const auto& n = ctx.instance();
  for (std::size_t p = 0; p < n.size(); ++p) {
    if (n.poset().up(p) == n.poset().all()) continue;
    for (Mask c : n.generators()) {
      if (star_mask(n, c, p) == 0) return fail("empty star of " + n.format(c) + " at " + el(n.poset(), p));
    }
  }
  return pass();
}

CheckResult locally_compact_faithful(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  if (!ctx.report().weakly_admissible) return skip("not weakly admissible");
  if (!is_non_degenerate(ctx.instance())) return fail("degenerate");
  return compact_order_criterion(ctx);
}

CheckResult directed_subbasis_is_basis(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  const auto& sp = ctx.spectrum();
  const auto& n = ctx.instance();
  PointSet covered(sp.size());
  for (const auto& b : sp.subbasic) covered |= b;
  if (!covered.all()) return fail("subbasic sets do not cover the spectrum");
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (std::size_t q = 0; q < n.size(); ++q) {
      const PointSet both = sp.subbasic[p] & sp.subbasic[q];
      for (std::size_t i = 0; i < sp.size(); ++i) {
        if (!both.test(i)) continue;
        bool found = false;
        for_each_bit(sp.masks[i], [&](std::size_t r) {
          if (!found && sp.subbasic[r].is_subset_of(both)) found = true;
        });
        if (!found) {
          return fail("no basic set around " + n.format(sp.masks[i]) + " inside the sets of " +
                      el(n.poset(), p) + " and " + el(n.poset(), q));
        }
      }
    }
  }
  return pass();
}

CheckResult directed_replacement_spectrum(CheckContext& ctx) {
  const DirectedReplacement d = directed_replacement(ctx.instance());
  if (!d.all_round) return fail("a minimal Cauchy up-set of the replacement is not round");
  if (!d.equation_holds()) return fail("replacement spectrum differs from the finite-subset images");
  return pass();
}

// ---- uniformly below ---------------------------------------------------

CheckResult below_is_auxiliary(CheckContext& ctx) {
  const Poset& p = ctx.poset();
  const BelowRelation& r = ctx.below();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!r.ub(a, b)) continue;
      // x <= a ⊲ b <= y forces x ⊲ y.
      bool ok = true;
      for_each_bit(p.down(a), [&](std::size_t x) {
        if (!is_subset(p.up(b), r.above[x])) ok = false;
      });
      if (!ok) return fail("not an auxiliary relation around (" + el(p, a) + ", " + el(p, b) + ")");
    }
    if (!is_subset(p.up(a), r.lower_above[a])) {
      return fail("order not inside the lower preorder at " + el(p, a));
    }
  }
  return pass();
}

CheckResult directed_below_transitive(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  if (!ctx.below().transitive()) return fail("uniformly-below is not transitive");
  return pass();
}

CheckResult lower_order_covers(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  const Poset& p = ctx.poset();
  const BelowRelation& r = ctx.below();
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (r.lower_above[a] != p.up(a)) return skip("lower preorder differs from the order");
  }
  if (!ctx.report().theta_in_order_covers) return fail("a member is not an order cover");
  return pass();
}

bool below_inside_order(const Poset& p, const BelowRelation& r) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!is_subset(r.above[a], p.up(a))) return false;
  }
  return true;
}

bool lower_equals_order(const Poset& p, const BelowRelation& r) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (r.lower_above[a] != p.up(a)) return false;
  }
  return true;
}

CheckResult order_covers_weak_admissibility(CheckContext& ctx) {
  if (!ctx.report().theta_in_order_covers) return skip("a member is not an order cover");
  if (ctx.instance().theta_empty()) {
    // Without a member nothing is uniformly below anything, while weak
    // admissibility already fails once two elements exist.
    const auto& r = ctx.below();
    const bool none = std::all_of(r.above.begin(), r.above.end(), [](Mask m) { return m == 0; });
    if (!none || ctx.report().weakly_admissible != (ctx.instance().size() <= 1)) {
      return fail("empty family does not give the expected empty relation");
    }
    return pass();
  }
  const bool weak = ctx.report().weakly_admissible;
  const bool inside = below_inside_order(ctx.poset(), ctx.below());
  if (weak != inside) {
    return fail(weak ? "weakly admissible but uniformly-below exceeds the order"
                     : "uniformly-below inside the order without weak admissibility");
  }
  return pass();
}

CheckResult admissible_order_consequences(CheckContext& ctx) {
  if (!ctx.admissible()) return skip("not admissible");
  if (!below_inside_order(ctx.poset(), ctx.below())) return fail("uniformly-below exceeds the order");
  if (!lower_equals_order(ctx.poset(), ctx.below())) return fail("lower preorder differs from the order");
  if (ctx.directed() && !ctx.report().theta_in_order_covers) return fail("directed but a member is not an order cover");
  return pass();
}

CheckResult admissible_filter_picado_pultr(CheckContext& ctx) {
  if (!ctx.filter()) return skip("family is not a filter");
  if (!ctx.admissible()) return skip("not admissible");
  if (!ctx.report().picado_pultr) return fail("admissible filter that is not Picado-Pultr admissible");
  return pass();
}

CheckResult regular_part_of_covers(CheckContext& ctx) {
  if (!ctx.admissible()) return skip("not admissible");
  const Poset& p = ctx.poset();
  const BelowRelation& r = ctx.below();
  std::string bad;
  for_each_subset(p.all(), [&](Mask c) {
    if (is_order_cover(p, c) && !is_order_cover(p, r.regular_part(c))) {
      bad = p.format(c);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("regular part of the order cover " + bad + " is not an order cover");
  return pass();
}

CheckResult regular_linked_round(CheckContext& ctx) {
  const auto& n = ctx.instance();
  const BelowRelation& r = ctx.below();
  std::string bad;
  for_each_subset(n.poset().all(), [&](Mask s) {
    if (is_regular_set(r, s) && is_linked(n, n.poset().set(s)) && !n.is_round(s)) {
      bad = n.format(s);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("regular linked set " + bad + " is not round");
  return pass();
}

CheckResult admissible_directed_faithful(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  if (!ctx.admissible()) return skip("not admissible");
  const auto& n = ctx.instance();
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (std::size_t q = 0; q < n.size(); ++q) {
      if (n.poset().leq(p, q) != basic_included(ctx.spectrum(), p, q)) {
        return fail("pair (" + el(n.poset(), p) + ", " + el(n.poset(), q) + ") not faithful");
      }
    }
  }
  return pass();
}

CheckResult star_regular_admissible(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  if (!ctx.star_regular()) return skip("not star-regular");
  if (ctx.admissible() != lower_equals_order(ctx.poset(), ctx.below())) {
    return fail(ctx.admissible() ? "admissible but the lower preorder differs from the order"
                                 : "lower preorder equals the order without admissibility");
  }
  return pass();
}

CheckResult star_regular_spectrum(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  if (!ctx.star_regular()) return skip("not star-regular");
  if (!below_inside_order(ctx.poset(), ctx.below())) return skip("uniformly-below exceeds the order");
  const std::vector<Mask> filters = regular_cauchy_filters(ctx.instance(), ctx.below());
  if (filters != ctx.spectrum().masks) {
    return fail("Cauchy regular filters " + fmt_points(ctx.poset(), filters) + " but spectrum " +
                fmt_points(ctx.poset(), ctx.spectrum().masks));
  }
  return pass();
}

CheckResult regularisation_spectrum(CheckContext& ctx) {
  if (!ctx.directed()) return skip("family is not directed");
  if (!ctx.admissible()) return skip("not admissible");
  const auto& n = ctx.instance();
  const Regularisation reg = regularise(n, Priming::stage_local);
  const NearnessInstance rn = reg.instance(n);
  if (!is_theta_directed(rn)) return fail("regularisation is not directed");
  if (!is_admissible(rn)) return fail("regularisation is not admissible");
  const std::vector<Mask> filters = regular_cauchy_filters(n, ctx.below());
  if (filters != rn.spectrum().masks) {
    return fail("Cauchy regular filters " + fmt_points(ctx.poset(), filters) + " but regularised spectrum " +
                fmt_points(ctx.poset(), rn.spectrum().masks));
  }
  return pass();
}

std::vector<NamedCheck> build_instance_checks() {
  return {
      {"spectrum-matches-minimal-cauchy", spectrum_matches_minimal_cauchy},
      {"points-are-round-cauchy-upsets", points_are_round_cauchy_upsets},
      {"points-are-minimal-cauchy-upsets", points_are_minimal_cauchy_upsets},
      {"upset-family-gives-upset-points", upset_family_gives_upset_points},
      {"directed-family-gives-directed-points", directed_family_gives_directed_points},
      {"filter-family-gives-filter-points", filter_family_gives_filter_points},
      {"spectrum-is-t1", spectrum_is_t1},
      {"minimum-avoidance", minimum_avoidance},
      {"cauchy-round-complements", cauchy_round_complements},
      {"order-implies-spectral-order", order_implies_spectral_order},
      {"degenerate-equations", degenerate_equations},
      {"compact-cover-criterion", compact_cover_criterion},
      {"compact-order-criterion", compact_order_criterion},
      {"order-scan-agrees", order_scan_agrees},
      {"restriction-empty-criteria", restriction_empty_criteria},
      {"wallman-three-forms", wallman_three_forms},
      {"subset-closed-is-order-closed", subset_closed_is_order_closed},
      {"wallman-implies-weakly-admissible", wallman_implies_weakly_admissible},
      {"picado-pultr-covers", picado_pultr_covers},
      {"picado-pultr-implies-wallman", picado_pultr_implies_wallman},
      {"wallman-filter-covers", wallman_filter_covers},
      {"near-oracle-agrees", near_oracle_agrees},
      {"near-iff-inside-point", near_iff_inside_point},
      {"non-degenerate", non_degenerate},
      {"minimum-near", minimum_near},
      {"degenerate-weak-admissibility", degenerate_weak_admissibility},
      {"near-bounded-below", near_bounded_below},
      {"restriction-oracle-agrees", restriction_oracle_agrees},
      {"cover-patching", cover_patching},
      {"stars-inside-restrictions", stars_inside_restrictions},
      {"closure-restriction-inclusions", closure_restriction_inclusions},
      {"closure-restriction-equality", closure_restriction_equality},
      {"star-closure-inclusions", star_closure_inclusions},
      {"star-nonempty", star_nonempty},
      {"locally-compact-faithful", locally_compact_faithful},
      {"directed-subbasis-is-basis", directed_subbasis_is_basis},
      {"directed-replacement-spectrum", directed_replacement_spectrum},
      {"below-is-auxiliary", below_is_auxiliary},
      {"directed-below-transitive", directed_below_transitive},
      {"lower-order-covers", lower_order_covers},
      {"order-covers-weak-admissibility", order_covers_weak_admissibility},
      {"admissible-order-consequences", admissible_order_consequences},
      {"admissible-filter-picado-pultr", admissible_filter_picado_pultr},
      {"regular-part-of-covers", regular_part_of_covers},
      {"regular-linked-round", regular_linked_round},
      {"admissible-directed-faithful", admissible_directed_faithful},
      {"star-regular-admissible", star_regular_admissible},
      {"star-regular-spectrum", star_regular_spectrum},
      {"regularisation-spectrum", regularisation_spectrum},
  };
}

}  // namespace

const std::vector<NamedCheck>& instance_checks() {
  static const std::vector<NamedCheck> checks = build_instance_checks();
  return checks;
}

const NamedCheck& find_instance_check(const std::string& name) {
  for (const auto& c : instance_checks()) {
    if (c.name == name) return c;
  }
  throw InvalidInput("unknown check: " + name);
}

namespace {

template <class F>
CheckResult guarded(const std::string& name, F&& f) {
  CheckResult r;
  try {
    r = f();
  } catch (const BoundExceeded& e) {
    r = {"", Outcome::skipped, std::string("bound: ") + e.what()};
  }
  r.name = name;
  return r;
}

}  // namespace

CheckResult run_check(const NamedCheck& check, CheckContext& ctx) {
  return guarded(check.name, [&] { return check.run(ctx); });
}

std::vector<CheckResult> run_instance_checks(const NearnessInstance& n, const CheckOptions& options) {
  CheckContext ctx(n, options);
  std::vector<CheckResult> out;
  for (const auto& c : instance_checks()) out.push_back(run_check(c, ctx));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.outcome == Outcome::fail; });
}

// ---- spaces ----------------------------------------------------------------

namespace {

bool points_round(const FiniteSpace& s, const NearnessInstance& n) {
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    if (!n.is_round(s.members_at(x))) return false;
  }
  return true;
}

bool points_regular(const FiniteSpace& s, const BelowRelation& r) {
  for (std::size_t x = 0; x < s.point_count(); ++x) {
    if (!is_regular_set(r, s.members_at(x))) return false;
  }
  return true;
}

std::vector<Mask> point_images(const FiniteSpace& s) {
  std::vector<Mask> out;
  for (std::size_t x = 0; x < s.point_count(); ++x) out.push_back(s.members_at(x));
  return sorted(out);
}

CheckResult cauchy_covers(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  bool all_cauchy = true;
  for (std::size_t x = 0; x < s.point_count(); ++x) all_cauchy = all_cauchy && n.is_cauchy(s.members_at(x));
  if (all_cauchy != theta_in_covers(s, n)) {
    return fail(all_cauchy ? "every point set is Cauchy but a member is not a cover"
                           : "members are covers but a point set is not Cauchy");
  }
  return pass();
}

CheckResult t1_recovery(const FiniteSpace& s, CheckContext& ctx) {
  const RoundTripReport r = roundtrip_t1(s, ctx.instance());
  if (!r.hypotheses()) return skip("not a T1 family with a coinitial family of covers");
  if (!r.recovered()) {
    std::string d;
    for (const auto& note : r.notes) d += (d.empty() ? "" : "; ") + note;
    return fail(d.empty() ? "space not recovered" : d);
  }
  return pass();
}

CheckResult subbasis_order(const FiniteSpace& s, CheckContext&) {
  if (!is_t1_family(s)) return skip("not a T1 family");
  const NearnessInstance all = cover_family(s);
  for (std::size_t p = 0; p < s.set_count(); ++p) {
    for (std::size_t q = 0; q < s.set_count(); ++q) {
      if (is_subset(s.set(p), s.set(q)) != leq_theta(all, p, q, OrderFamily::theta)) {
        return fail("inclusion and cover order differ on (" + s.family().name(p) + ", " + s.family().name(q) + ")");
      }
    }
  }
  return pass();
}

CheckResult near_for_all_covers(const FiniteSpace& s, CheckContext&) {
  if (!is_t1_family(s)) return skip("not a T1 family");
  if (!near_equals_intersection(s, cover_family(s))) return fail("near and meeting differ");
  return pass();
}

CheckResult restriction_for_all_covers(const FiniteSpace& s, CheckContext& ctx) {
  if (!is_t1_family(s)) return skip("not a T1 family");
  if (!restriction_equals_closure_covers(s, cover_family(s))) return fail("fails for the family of all covers");
  const auto& n = ctx.instance();
  if (theta_in_covers(s, n) && is_cover_coinitial(s, n) && !restriction_equals_closure_covers(s, n)) {
    return fail("fails for the given coinitial family");
  }
  return pass();
}

CheckResult local_t1_recovery(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (s.point_count() == 0) return skip("empty space");
  if (!is_t1_family(s)) return skip("not a T1 family");
  if (!theta_in_covers(s, n)) return skip("a member is not a cover");
  if (!ctx.directed()) return skip("family is not directed");
  if (!is_star_coinitial(s, n)) return skip("not star-coinitial");
  if (ctx.spectrum().masks != point_images(s)) return fail("spectrum is not the set of point images");
  if (!s.is_basis()) return fail("family is not a basis");
  const Mask all = s.family().all();
  for (std::size_t p = 0; p < s.set_count(); ++p) {
    const Mask cl = s.closure(s.set(p));
    std::string bad;
    for_each_subset(all, [&](Mask c) {
      bool concrete = false, abstract = false;
      for (Mask g : n.generators()) {
        concrete = concrete || s.family().refines(star_concrete(s, g, p), c);
        abstract = abstract || s.family().refines(star_mask(n, g, p), c);
      }
      const bool covers = is_subset(cl, s.union_of(c));
      if (concrete != abstract || abstract != covers) {
        bad = s.family().format(c);
        return false;
      }
      return true;
    });
    if (!bad.empty()) return fail("star families differ at " + s.family().name(p) + " on " + bad);
  }
  return pass();
}

CheckResult compatible_characterisation(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  const bool rhs = s.is_basis() && theta_in_covers(s, n) && points_round(s, n);
  if (is_compatible(s, n) != rhs) {
    return fail(rhs ? "basis, covers and round point sets without compatibility"
                    : "compatible without basis, covers or round point sets");
  }
  return pass();
}

CheckResult star_coinitial_compatible(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!s.is_basis() || !is_t1_family(s)) return skip("not a T1 basis");
  if (!theta_in_covers(s, n)) return skip("a member is not a cover");
  if (!is_star_coinitial(s, n)) return skip("not star-coinitial");
  if (!is_compatible(s, n)) return fail("star-coinitial family of covers is not compatible");
  return pass();
}

CheckResult td_compatible_picado_pultr(const FiniteSpace& s, CheckContext& ctx) {
  if (!is_td_family(s)) return skip("not a T_D family");
  if (!ctx.upset()) return skip("family is not an up-set");
  const auto& n = ctx.instance();
  const bool rhs = s.is_basis() && theta_in_covers(s, n) && ctx.report().picado_pultr;
  if (is_compatible(s, n) != rhs) {
    return fail(rhs ? "Picado-Pultr admissible covers of a basis without compatibility"
                    : "compatible without being Picado-Pultr admissible covers of a basis");
  }
  return pass();
}

CheckResult compatible_upset_wallman(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!ctx.upset()) return skip("family is not an up-set");
  if (!theta_in_covers(s, n)) return skip("a member is not a cover");
  if (!is_compatible(s, n)) return skip("not compatible");
  if (!ctx.report().wallman) return fail("compatible up-set of covers is not Wallman admissible");
  return pass();
}

CheckResult locally_uniform_base(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  const bool lhs = is_locally_uniform(s, n) && is_compatible(s, n);
  if (lhs != is_uniform_base(s, n)) {
    return fail(lhs ? "locally uniform and compatible without a uniform neighbourhood base"
                    : "uniform neighbourhood base without local uniformity and compatibility");
  }
  return pass();
}

CheckResult locally_uniform_regular_points(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!is_compatible(s, n)) return skip("not compatible");
  if (!ctx.directed()) return skip("family is not directed");
  if (is_locally_uniform(s, n) != points_regular(s, ctx.below())) {
    return fail("local uniformity and regular point sets differ");
  }
  return pass();
}

CheckResult compatible_regular_points_admissible(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!is_compatible(s, n)) return skip("not compatible");
  if (!points_regular(s, ctx.below())) return skip("a point set is not regular");
  if (!ctx.admissible()) return fail("compatible with regular point sets but not admissible");
  return pass();
}

CheckResult basis_covers_are_order_covers(const FiniteSpace& s, CheckContext&) {
  if (!s.is_basis()) return skip("not a basis");
  std::string bad;
  for_each_subset(s.family().all(), [&](Mask c) {
    if (s.is_cover(c) && !is_order_cover(s.family(), c)) {
      bad = s.family().format(c);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("cover " + bad + " is not an inclusion cover");
  return pass();
}

CheckResult td_order_covers_are_covers(const FiniteSpace& s, CheckContext&) {
  if (!is_td_family(s)) return skip("not a T_D family");
  std::string bad;
  for_each_subset(s.family().all(), [&](Mask c) {
    if (is_order_cover(s.family(), c) && !s.is_cover(c)) {
      bad = s.family().format(c);
      return false;
    }
    return true;
  });
  if (!bad.empty()) return fail("inclusion cover " + bad + " does not cover the space");
  return pass();
}

CheckResult td_basis_cardinality(const FiniteSpace& s, CheckContext&) {
  if (!is_t1_family(s) || !is_td_family(s) || !s.is_basis()) return skip("not a T1 space with a T_D basis");
  if (s.set_count() < s.point_count()) return fail("fewer basic sets than points");
  return pass();
}

CheckResult finite_t1_discrete(const FiniteSpace& s, CheckContext&) {
  if (!is_t1_family(s)) return skip("not a T1 family");
  if (s.topology().size() != (std::size_t{1} << s.point_count())) return fail("generated topology is not discrete");
  return pass();
}

CheckResult complete_regularisation_recovers(const FiniteSpace& s, CheckContext& ctx) {
  const auto& n = ctx.instance();
  if (!is_t1_family(s)) return skip("not a T1 family");
  if (!ctx.filter()) return skip("family is not a filter");
  if (!theta_in_covers(s, n)) return skip("a member is not a cover");
  if (!is_compatible(s, n) || !is_locally_uniform(s, n)) return skip("not locally uniform and compatible");
  if (!ctx.admissible()) return fail("locally uniform compatible filter is not admissible");
  if (!is_complete(s, n)) return skip("not complete");
  const NearnessInstance rn = regularise(n).instance(n);
  if (rn.spectrum().masks != point_images(s)) return fail("regularised spectrum is not the set of point images");
  return pass();
}

std::vector<SpaceCheck> build_space_checks() {
  return {
      {"cauchy-covers", cauchy_covers},
      {"t1-recovery", t1_recovery},
      {"subbasis-order", subbasis_order},
      {"near-for-all-covers", near_for_all_covers},
      {"restriction-for-all-covers", restriction_for_all_covers},
      {"local-t1-recovery", local_t1_recovery},
      {"compatible-characterisation", compatible_characterisation},
      {"star-coinitial-compatible", star_coinitial_compatible},
      {"td-compatible-picado-pultr", td_compatible_picado_pultr},
      {"compatible-upset-wallman", compatible_upset_wallman},
      {"locally-uniform-base", locally_uniform_base},
      {"locally-uniform-regular-points", locally_uniform_regular_points},
      {"compatible-regular-points-admissible", compatible_regular_points_admissible},
      {"basis-covers-are-order-covers", basis_covers_are_order_covers},
      {"td-order-covers-are-covers", td_order_covers_are_covers},
      {"td-basis-cardinality", td_basis_cardinality},
      {"finite-t1-discrete", finite_t1_discrete},
      {"complete-regularisation-recovers", complete_regularisation_recovers},
  };
}

}  // namespace

const std::vector<SpaceCheck>& space_checks() {
  static const std::vector<SpaceCheck> checks = build_space_checks();
  return checks;
}

const SpaceCheck& find_space_check(const std::string& name) {
  for (const auto& c : space_checks()) {
    if (c.name == name) return c;
  }
  throw InvalidInput("unknown check: " + name);
}

CheckResult run_check(const SpaceCheck& check, const FiniteSpace& s, CheckContext& ctx) {
  return guarded(check.name, [&] { return check.run(s, ctx); });
}

std::vector<CheckResult> run_space_checks(const FiniteSpace& s, const NearnessInstance& n,
                                          const CheckOptions& options) {
  CheckContext ctx(n, options);
  std::vector<CheckResult> out;
  for (const auto& c : space_checks()) out.push_back(run_check(c, s, ctx));
  // The same family under sampled covers exercises the coinitial case.
  if (is_t1_family(s)) {
    out.push_back(guarded("t1-recovery-sampled", [&] {
      CheckContext sampled(cover_family(s, CoverMode::sample(options.sample_extra, options.seed)), options);
      return t1_recovery(s, sampled);
    }));
  }
  return out;
}

// ---- frames ----------------------------------------------------------------

std::vector<CheckResult> run_frame_checks(const FiniteFrame& f, const NearnessInstance& n) {
  std::vector<CheckResult> out;
  const Poset& p = f.poset();
  out.push_back(guarded("frame-covers", [&] {
    std::string bad;
    for_each_subset(p.all(), [&](Mask c) {
      if (is_order_cover(p, c) != is_frame_cover(f, c)) {
        bad = p.format(c);
        return false;
      }
      return true;
    });
    return bad.empty() ? pass() : fail("order cover and join test differ on " + bad);
  }));
  out.push_back(guarded("heyting-residuation", [&] {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = 0; b < f.size(); ++b) {
        for (std::size_t r = 0; r < f.size(); ++r) {
          if (p.leq(r, f.heyting(a, b)) != p.leq(f.meet(r, a), b)) {
            return fail("residuation fails at (" + p.name(r) + ", " + p.name(a) + ", " + p.name(b) + ")");
          }
        }
      }
    }
    return pass();
  }));
  out.push_back(guarded("picado-pultr-sublocales", [&] {
    const PPEquivReport r = pp_equiv_check(f, n);
    if (!r.theta_upset) return skip("family is not an up-set");
    if (!r.agree()) {
      std::string d = r.picado_pultr ? "admissible but the sublocale side fails" : "sublocale side holds without admissibility";
      for (const auto& m : r.mismatches) d += "; " + m;
      return fail(d);
    }
    return pass();
  }));
  return out;
}

}  // namespace nearposet
