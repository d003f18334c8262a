#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "nearposet/error.hpp"
#include "nearposet/generate.hpp"
#include "nearposet/poset.hpp"

using namespace nearposet;
using namespace nearposet::testing;

namespace {

Mask brute_up(const Poset& p, Mask s) {
  Mask out = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (((s >> x) & 1U) && p.leq(x, q)) out |= bit(q);
    }
  }
  return out;
}

bool brute_refines(const Poset& p, Mask r, Mask s) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!((r >> x) & 1U)) continue;
    bool found = false;
    for (std::size_t y = 0; y < p.size(); ++y) found = found || (((s >> y) & 1U) && p.leq(x, y));
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST(Poset, UpClosureExamples) {
  Poset c = chain01();
  EXPECT_EQ(c.up_closure(m(c, {"0"})), m(c, {"0", "1"}));
  Poset a = antichain_ab();
  EXPECT_EQ(a.up_closure(m(a, {"a"})), m(a, {"a"}));
  Poset v = vee();
  EXPECT_EQ(v.up_closure(m(v, {"a", "b"})), m(v, {"a", "b", "1"}));
}

TEST(Poset, RefinesExamples) {
  Poset v = vee();
  EXPECT_TRUE(v.refines(0, 0));
  EXPECT_TRUE(v.refines(m(v, {"a"}), m(v, {"1"})));
  Poset a = antichain_ab();
  EXPECT_FALSE(a.refines(m(a, {"a", "b"}), m(a, {"a"})));
}

TEST(Poset, DirectedAndFilterExamples) {
  Poset a = antichain_ab();
  EXPECT_FALSE(is_directed(a, a.empty_set()));
  EXPECT_FALSE(is_directed(a, a.full_set()));
  Poset c = chain01();
  EXPECT_TRUE(is_filter(c, c.set({"1"})));
}

TEST(Poset, UpsetListings) {
  EXPECT_EQ(enumerate_upsets(antichain_ab()).size(), 4U);
  Poset c = chain01();
  std::vector<Mask> up;
  for (const auto& e : enumerate_upsets(c)) up.push_back(e.bits());
  EXPECT_EQ(up, (std::vector<Mask>{0, m(c, {"1"}), m(c, {"0", "1"})}));
  Poset v = vee();
  up.clear();
  for (const auto& e : enumerate_upsets(v)) up.push_back(e.bits());
  std::vector<Mask> want{0, m(v, {"1"}), m(v, {"a", "1"}), m(v, {"b", "1"}), m(v, {"a", "b", "1"})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(up, want);
}

TEST(Poset, AntisymmetryRejected) {
  EXPECT_THROW(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
  EXPECT_THROW(Poset({"a", "a"}, std::vector<std::pair<std::string, std::string>>{}), InvalidInput);
  EXPECT_THROW(Poset({"a"}, {{"a", "z"}}), InvalidInput);
}

TEST(Poset, ForeignSetsRejected) {
  Poset a = antichain_ab();
  Poset b = antichain_ab();
  EXPECT_THROW(closure_up(a, b.full_set()), InstanceMismatch);
  EXPECT_THROW((void)(a.full_set() | b.full_set()), InstanceMismatch);
}

TEST(Poset, ClosuresAgreeWithDefinitionOnAllSmallPosets) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : gen::posets_up_to_iso(n)) {
      for (Mask s = 0; s <= p.all(); ++s) {
        EXPECT_EQ(p.up_closure(s), brute_up(p, s));
        const Mask up = p.up_closure(s);
        EXPECT_EQ(p.up_closure(up), up);
        for (Mask r = 0; r <= p.all(); ++r) {
          EXPECT_EQ(p.refines(r, s), brute_refines(p, r, s));
          if (is_subset(r, s)) {
            EXPECT_TRUE(is_subset(p.up_closure(r), up));
          }
        }
      }
    }
  }
}

TEST(Poset, UpsetEnumerationMatchesScan) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Poset& p : gen::posets_up_to_iso(n)) {
      std::vector<Mask> scan, listed;
      for (Mask s = 0; s <= p.all(); ++s) {
        if (brute_up(p, s) == s) scan.push_back(s);
      }
      for_each_upset(p, [&](Mask s) {
        listed.push_back(s);
        return true;
      });
      EXPECT_EQ(listed, scan);
    }
  }
}

TEST(Generate, PosetCountsUpToIsomorphism) {
  const std::vector<std::size_t> counts{1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n < counts.size(); ++n) EXPECT_EQ(gen::posets_up_to_iso(n).size(), counts[n]) << n;
  EXPECT_THROW(gen::posets_up_to_iso(7), BoundExceeded);
}

TEST(Generate, DistributiveLatticeCounts) {
  const std::vector<std::size_t> counts{0, 1, 1, 1, 2, 3, 5};
  for (std::size_t n = 1; n < counts.size(); ++n) EXPECT_EQ(gen::distributive_lattices(n).size(), counts[n]) << n;
}

TEST(Generate, RefinementClosedFamiliesMatchScan) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : gen::posets_up_to_iso(n)) {
      const std::size_t subsets = std::size_t{1} << n;
      std::size_t scan = 0;
      for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        bool closed = true;
        for (Mask c = 0; c < subsets && closed; ++c) {
          if (!((fam >> c) & 1U)) continue;
          for (Mask d = 0; d < subsets && closed; ++d) {
            if (p.refines(c, d) && !((fam >> d) & 1U)) closed = false;
          }
        }
        scan += closed;
      }
      EXPECT_EQ(gen::refinement_closed_families(p).size(), scan);
    }
  }
}

TEST(Generate, RandomT1FamiliesSeparate) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto sets = gen::random_t1_family(rng, 4, 6);
    EXPECT_TRUE(gen::separates_t1(4, sets));
    EXPECT_LE(sets.size(), 6U);
  }
  for (const auto& fam : gen::t1_families(3)) EXPECT_TRUE(gen::separates_t1(3, fam));
}
