#include "d4/rootdata.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace d4;

namespace {

WeylElement word(std::initializer_list<int> w) {
  std::vector<int> v(w);
  return WeylElement::from_word(v);
}

}  // namespace

TEST(RootData, FundamentalWeightsAreDualToCoroots) {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const Weight a = simple_root(j);
      // roots have squared length 2, so the coroot pairing is the inner product
      EXPECT_EQ(inner(fundamental_weight(i), a), i == j ? 1 : 0) << i << "," << j;
    }
  EXPECT_EQ(fundamental_weight(3), Weight(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)));
}

TEST(RootData, RhoAndLevels) {
  EXPECT_EQ(rho(), Weight(3, 2, 1, 0));
  const auto c = simple_root_coords(rho());
  EXPECT_EQ(c[0], 3);
  EXPECT_EQ(c[1], 5);
  EXPECT_EQ(c[2], 3);
  EXPECT_EQ(c[3], 3);
  EXPECT_EQ(pair(rho(), fundamental_coweight(1)), 3);
  EXPECT_EQ(pair(rho(), fundamental_coweight(2)), 5);
}

TEST(RootData, DominanceTest) {
  EXPECT_TRUE(is_dominant(CoWeight(3, 2, 1, 0)));
  EXPECT_TRUE(is_dominant(CoWeight(1, 1, 1, -1)));
  EXPECT_FALSE(is_dominant(CoWeight(1, 1, 0, -1)));
  EXPECT_FALSE(is_dominant(CoWeight(1, 2, 0, 0)));
}

TEST(RootData, SimpleReflections) {
  const Weight v(1, 2, 3, 4);
  EXPECT_EQ(WeylElement::simple_reflection(3).apply(v), Weight(1, 2, 4, 3));
  EXPECT_EQ(WeylElement::simple_reflection(4).apply(fundamental_weight(4)),
            Weight(Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)));
  for (int i = 1; i <= 4; ++i) {
    const auto s = WeylElement::simple_reflection(i);
    EXPECT_TRUE((s * s).is_identity());
    EXPECT_EQ(s.apply(simple_root(i)), -simple_root(i));
  }
  EXPECT_THROW(WeylElement::simple_reflection(0), Error);
  EXPECT_THROW(WeylElement::simple_reflection(5), Error);
}

TEST(RootData, GroupClosure) {
  std::set<WeylElement> seen{WeylElement()};
  std::vector<WeylElement> frontier{WeylElement()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= 4; ++i) {
        const auto v = w * WeylElement::simple_reflection(i);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  EXPECT_EQ(seen.size(), kWeylOrder);
  EXPECT_EQ(weyl_group().size(), kWeylOrder);
  for (const auto& w : seen) {
    int neg = 0;
    for (int s = 0; s < 4; ++s) neg += w.sign_at(s) < 0;
    EXPECT_EQ(neg % 2, 0);
  }
}

TEST(RootData, LengthsAndWords) {
  EXPECT_EQ(WeylElement().length(), 0);
  const auto wo = word({4, 2, 1, 4, 2, 4, 3, 2, 4, 1, 2, 3});
  EXPECT_EQ(wo.length(), 12);
  EXPECT_EQ(wo, longest_element());
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(wo.apply(fundamental_weight(i)), -fundamental_weight(i));
  EXPECT_EQ(word({1, 2, 3, 4, 2, 1}).length(), 6);
  for (const auto& w : weyl_group()) {
    EXPECT_EQ(static_cast<int>(w.reduced_word().size()), w.length());
    EXPECT_EQ(WeylElement::from_word(w.reduced_word()), w);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(std::abs((w * WeylElement::simple_reflection(i)).length() - w.length()), 1);
  }
}

TEST(RootData, LongestInSubgroups) {
  const std::vector<int> all{1, 2, 3, 4}, outer{1, 3, 4}, none{};
  EXPECT_EQ(longest_in(all).length(), 12);
  EXPECT_EQ(longest_in(outer), word({1, 3, 4}));
  EXPECT_EQ(longest_in(outer).length(), 3);
  EXPECT_TRUE(longest_in(none).is_identity());
  EXPECT_EQ(longest_levi(Parabolic(1)), word({3, 2, 4, 3, 2, 3}));
}

TEST(RootData, MinimalCosetRepresentatives) {
  const std::size_t sizes[] = {8, 24, 8, 8};
  for (int i = 1; i <= 4; ++i) {
    const Parabolic p(i);
    const auto& reps = min_coset_reps(p);
    EXPECT_EQ(reps.size(), sizes[i - 1]);
    const auto& levi = p.levi_nodes();
    std::vector<WeylElement> wp;
    for (const auto& u : weyl_group()) {
      bool in = true;
      for (const int l : u.reduced_word()) in = in && std::find(levi.begin(), levi.end(), l) != levi.end();
      if (in) wp.push_back(u);
    }
    for (const auto& w : reps)
      for (const auto& u : wp) EXPECT_LE(w.length(), (w * u).length());
    for (std::size_t k = 1; k < reps.size(); ++k) EXPECT_TRUE(canonical_less(reps[k - 1], reps[k]));
  }
  EXPECT_EQ(min_coset_reps(Parabolic(1)).back().word_string(), "s1s2s3s4s2s1");
  EXPECT_EQ(min_coset_reps(Parabolic(2)).back(), word({2, 4, 1, 2, 3, 2, 1, 4, 2}));
  EXPECT_EQ(longest_coset_rep(Parabolic(2)).length(), 9);
}

TEST(RootData, ThetaComplementsLength) {
  for (int i = 1; i <= 4; ++i) {
    const Parabolic p(i);
    const int top = longest_coset_rep(p).length();
    for (const auto& w : min_coset_reps(p)) {
      const auto theta = longest_element() * w * longest_levi(p);
      EXPECT_TRUE(is_min_coset_rep(theta, p));
      EXPECT_EQ(theta.length(), top - w.length());
    }
  }
}

TEST(RootData, DiagramAutomorphisms) {
  const auto& f = diagram_automorphisms();
  ASSERT_EQ(f.size(), 6u);
  std::set<DiagramAutomorphism> s(f.begin(), f.end());
  for (const auto& g : f)
    for (const auto& h : f) EXPECT_TRUE(s.count(g * h));
  const auto t34 = DiagramAutomorphism::transposition(3, 4);
  EXPECT_EQ(t34.apply(fundamental_weight(3)), fundamental_weight(4));
  EXPECT_EQ(DiagramAutomorphism::transposition(1, 3).apply(simple_root(1)), simple_root(3));
  EXPECT_EQ(DiagramAutomorphism().apply(Weight(1, 2, 3, 4)), Weight(1, 2, 3, 4));
  for (const auto& g : f) {
    EXPECT_EQ(g.apply(simple_root(2)), simple_root(2));
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(g.apply(fundamental_weight(i)), fundamental_weight(g(i)));
    EXPECT_TRUE(is_dominant(g.apply(rho())));
  }
}

TEST(RootData, AutomorphismEquivariance) {
  const Weight v(Rational(7, 2), Rational(5, 2), Rational(3, 2), Rational(1, 2));
  for (const auto& g : diagram_automorphisms())
    for (const auto& w : weyl_group()) EXPECT_EQ(g.apply(w.apply(v)), g.apply(w).apply(g.apply(v)));
}

TEST(RootData, Lattices) {
  EXPECT_TRUE(in_weight_lattice(fundamental_weight(3)));
  EXPECT_FALSE(in_weight_lattice(Weight(Rational(1, 2), 0, 0, 0)));
  EXPECT_FALSE(in_root_lattice(fundamental_weight(1)));
  EXPECT_TRUE(in_root_lattice(fundamental_weight(2)));
  EXPECT_TRUE(in_root_lattice(fundamental_weight(1) + fundamental_weight(3) + fundamental_weight(4)));
}
