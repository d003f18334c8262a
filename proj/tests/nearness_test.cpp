#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "nearposet/generate.hpp"
#include "nearposet/nearness.hpp"

using namespace nearposet;
using namespace nearposet::testing;

namespace {

// Minimal sets among those meeting every member of Θ^≤ listed in full.
std::vector<Mask> minimal_cauchy_brute(const Poset& p, const std::vector<Mask>& theta) {
  std::vector<Mask> closed;
  for (Mask c = 0; c <= p.all(); ++c) {
    for (Mask g : theta) {
      if (p.refines(g, c)) {
        closed.push_back(c);
        break;
      }
    }
  }
  std::vector<Mask> cauchy;
  for (Mask s = 0; s <= p.all(); ++s) {
    bool ok = true;
    for (Mask c : closed) ok = ok && (s & c) != 0;
    if (ok) cauchy.push_back(s);
  }
  std::vector<Mask> out;
  for (Mask s : cauchy) {
    bool minimal = true;
    for (Mask t : cauchy) minimal = minimal && !(t != s && is_subset(t, s));
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Nearness, RefinementMembershipExamples) {
  const auto n1 = i1();
  EXPECT_TRUE(n1.in_theta_le(m(n1.poset(), {"a", "b"})));
  EXPECT_FALSE(n1.in_theta_le(m(n1.poset(), {"a"})));
  const auto n2 = i2();
  EXPECT_TRUE(n2.in_theta_le(m(n2.poset(), {"0", "1"})));
}

TEST(Nearness, CauchyAndRoundExamples) {
  Poset a = antichain_ab();
  NearnessInstance empty(a, std::vector<Mask>{});
  for (Mask s = 0; s <= a.all(); ++s) EXPECT_TRUE(empty.is_cauchy(s));
  const auto n1 = i1();
  EXPECT_TRUE(n1.is_cauchy(m(n1.poset(), {"a"})));
  EXPECT_TRUE(n1.is_round(m(n1.poset(), {"a"})));
  const auto n2 = i2();
  EXPECT_FALSE(n2.is_round(n2.poset().all()));
}

TEST(Nearness, SpectrumExamples) {
  const auto n1 = i1();
  EXPECT_EQ(n1.spectrum().masks, (std::vector<Mask>{m(n1.poset(), {"a"}), m(n1.poset(), {"b"})}));
  const auto n2 = i2();
  EXPECT_EQ(n2.spectrum().masks, (std::vector<Mask>{m(n2.poset(), {"1"})}));
  EXPECT_EQ(masks(spectrum_oracle(n2)), (std::vector<Mask>{m(n2.poset(), {"1"})}));

  Poset a = antichain_ab();
  EXPECT_EQ(NearnessInstance(a, std::vector<Mask>{}).spectrum().masks, (std::vector<Mask>{0}));
  EXPECT_TRUE(NearnessInstance(a, {0, m(a, {"a"})}).spectrum().masks.empty());
  Poset c = chain01();
  EXPECT_EQ(NearnessInstance(c, {m(c, {"0"})}).spectrum().masks, (std::vector<Mask>{c.all()}));
}

TEST(Nearness, I3Spectrum) {
  const auto n3 = i3();
  const Poset& p = n3.poset();
  EXPECT_EQ(n3.spectrum().masks, (std::vector<Mask>{m(p, {"a", "1"}), m(p, {"b", "1"})}));
}

TEST(Nearness, FamilyOrderExamples) {
  const auto n1 = i1();
  EXPECT_FALSE(leq_theta(n1, 0, 1, OrderFamily::theta_le));
  EXPECT_TRUE(leq_theta(n1, 0, 0, OrderFamily::theta_le));
  const auto n2 = i2();
  EXPECT_TRUE(leq_theta(n2, 0, 1, OrderFamily::theta_le));
}

TEST(Nearness, DegenerateBanners) {
  Poset a = antichain_ab();
  const auto empty = classify_degenerate(NearnessInstance(a, std::vector<Mask>{}));
  EXPECT_TRUE(empty.consistent());
  EXPECT_TRUE(empty.spectrum_is_empty_point);
  const auto with_empty = classify_degenerate(NearnessInstance(a, {0, m(a, {"a"})}));
  EXPECT_TRUE(with_empty.consistent());
  EXPECT_TRUE(with_empty.spectrum_empty);
  Poset one({"0"}, {});
  const auto zero = classify_degenerate(NearnessInstance(one, {1}));
  EXPECT_TRUE(zero.consistent());
  EXPECT_TRUE(zero.spectrum_is_full);
}

TEST(Nearness, ClosureKindsShareTheSpectrum) {
  std::mt19937_64 rng(5);
  for (const Poset& p : gen::posets_up_to_iso(4)) {
    for (int i = 0; i < 20; ++i) {
      const auto theta = gen::random_family(rng, p, 0.2);
      const auto listed = NearnessInstance(p, theta).spectrum().masks;
      EXPECT_EQ(NearnessInstance(p, theta, ThetaClosure::superset).spectrum().masks, listed);
      EXPECT_EQ(NearnessInstance(p, theta, ThetaClosure::refinement).spectrum().masks, listed);
    }
  }
}

TEST(Nearness, SpectrumMatchesBruteMinimalCauchy) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : gen::posets_up_to_iso(n)) {
      for (int i = 0; i < 30; ++i) {
        const auto theta = gen::random_family(rng, p, 0.25);
        EXPECT_EQ(NearnessInstance(p, theta).spectrum().masks, minimal_cauchy_brute(p, theta));
      }
    }
  }
}

TEST(Nearness, DirectednessAndUpsets) {
  Poset a = antichain_ab();
  EXPECT_FALSE(is_theta_directed(NearnessInstance(a, std::vector<Mask>{})));
  EXPECT_TRUE(is_theta_directed(i1()));
  EXPECT_TRUE(is_theta_upset(i1()));
  EXPECT_FALSE(is_theta_upset(i2()));
  EXPECT_TRUE(is_theta_filter(NearnessInstance(chain01(), {2}, ThetaClosure::superset)));
}
