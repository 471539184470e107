#include "d4/reptensor.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace d4;

namespace {

DominantWeight dw(const oracle::Fundamental& a) { return DominantWeight(a[0], a[1], a[2], a[3]); }

}  // namespace

TEST(RepTensor, DominantWeight) {
  const DominantWeight l(1, 0, 2, 0);
  EXPECT_EQ(l.str(), "w1+2w3");
  EXPECT_EQ(DominantWeight().str(), "0");
  EXPECT_EQ(DominantWeight::from_weight(l.weight()), l);
  EXPECT_TRUE(is_dominant(to_coweight(l.weight())));
  EXPECT_EQ(l.doubled(), (std::array<int, 4>{4, 2, 2, -2}));
  EXPECT_THROW(DominantWeight(-1, 0, 0, 0), Error);
  EXPECT_THROW(DominantWeight::from_weight(Weight(0, 1, 0, 0)), Error);
}

TEST(RepTensor, WeylDimension) {
  EXPECT_EQ(weyl_dimension(DominantWeight()), 1);
  EXPECT_EQ(weyl_dimension(DominantWeight(1, 0, 0, 0)), 8);
  EXPECT_EQ(weyl_dimension(DominantWeight(0, 0, 1, 0)), 8);
  EXPECT_EQ(weyl_dimension(DominantWeight(0, 1, 0, 0)), 28);
  EXPECT_EQ(weyl_dimension(DominantWeight(1, 1, 1, 1)), 4096);
}

TEST(RepTensor, FreudenthalSmallCases) {
  const auto triv = weight_multiplicities(DominantWeight());
  EXPECT_EQ(triv->all_weights(), (std::map<std::array<int, 4>, std::int64_t>{{{0, 0, 0, 0}, 1}}));
  const auto vec = weight_multiplicities(DominantWeight(1, 0, 0, 0))->all_weights();
  EXPECT_EQ(vec.size(), 8u);
  for (const auto& [w, m] : vec) {
    EXPECT_EQ(m, 1);
    int nonzero = 0;
    for (int c : w) nonzero += c != 0;
    EXPECT_EQ(nonzero, 1);
  }
  const auto adj = weight_multiplicities(DominantWeight(0, 1, 0, 0));
  EXPECT_EQ(adj->all_weights().size(), 25u);
  EXPECT_EQ(adj->multiplicity({0, 0, 0, 0}), 4);
  EXPECT_EQ(adj->multiplicity({2, 2, 0, 0}), 1);
  EXPECT_EQ(adj->multiplicity({2, 0, 0, 0}), 0);
}

TEST(RepTensor, FreudenthalMatchesKostant) {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int e = 0; e <= 1; ++e) {
          const oracle::Fundamental f{a, b, c, e};
          const auto table = weight_multiplicities(dw(f));
          EXPECT_EQ(table->dominant(), oracle::kostant_dominant(f)) << dw(f).str();
        }
}

TEST(RepTensor, FreudenthalTotalsMatchWeylDimension) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int e = 0; e <= 3; ++e) {
          const DominantWeight l(a, b, c, e);
          const auto t = weight_multiplicities(l);
          ASSERT_EQ(t->total(), weyl_dimension(l)) << l.str();
          ASSERT_EQ(t->multiplicity(l.doubled()), 1);
        }
}

TEST(RepTensor, TableIsWeylInvariant) {
  const auto t = weight_multiplicities(DominantWeight(1, 1, 0, 2));
  for (const auto& [x, m] : t->all_weights()) {
    EXPECT_EQ(t->multiplicity(dominant_conjugate(x)), m);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(t->multiplicity(WeylElement::simple_reflection(i).apply_doubled(x)), m);
  }
}

TEST(RepTensor, DominantConjugate) {
  EXPECT_EQ(dominant_conjugate({0, -2, 4, 1}), (std::array<int, 4>{4, 2, 1, 0}));
  EXPECT_EQ(dominant_conjugate({-1, -1, -1, -1}), (std::array<int, 4>{1, 1, 1, 1}));
  EXPECT_EQ(dominant_conjugate({-1, 1, 1, 1}), (std::array<int, 4>{1, 1, 1, -1}));
}

TEST(RepTensor, InvariantExamples) {
  EXPECT_EQ(invariant_dim({}, {}, {}), 1);
  EXPECT_EQ(invariant_dim({1, 0, 0, 0}, {1, 0, 0, 0}, {}), 1);
  EXPECT_GT(invariant_dim({1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}), 0);
  EXPECT_GT(invariant_dim({0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}), 0);
  EXPECT_GT(invariant_dim({0, 2, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 1}), 0);
  EXPECT_EQ(invariant_dim({2, 0, 0, 0}, {}, {}), 0);
  oracle::CharacterProductOracle o;
  EXPECT_EQ(o.invariant_dim({1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}), 1);
  EXPECT_EQ(o.invariant_dim({2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}), 0);
  EXPECT_EQ(o.invariant_dim({1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}), invariant_dim({1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}));
}

TEST(RepTensor, SelfDuality) {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int e = 0; e <= 2; ++e) EXPECT_EQ(invariant_dim({a, b, c, e}, {a, b, c, e}, {}), 1);
}

TEST(RepTensor, Symmetry) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 3);
  for (int t = 0; t < 60; ++t) {
    DominantTriple x;
    for (auto& w : x)
      for (auto& c : w.a) c = d(rng);
    const auto base = invariant_dim(x[0], x[1], x[2]);
    std::array<int, 3> p{0, 1, 2};
    do {
      EXPECT_EQ(invariant_dim(x[static_cast<std::size_t>(p[0])], x[static_cast<std::size_t>(p[1])],
                              x[static_cast<std::size_t>(p[2])]),
                base);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& g : diagram_automorphisms()) {
      DominantTriple y;
      for (std::size_t k = 0; k < 3; ++k) y[k] = DominantWeight::from_weight(g.apply(x[k].weight()));
      EXPECT_EQ(invariant_dim(y[0], y[1], y[2]), base);
    }
  }
}

TEST(RepTensor, DecompositionDimensions) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(0, 1);
  for (int t = 0; t < 8; ++t) {
    DominantWeight l, m;
    for (auto& c : l.a) c = d(rng);
    for (auto& c : m.a) c = d(rng);
    Integer total = 0;
    const auto ld = l.doubled(), md = m.doubled();
    const int top = (ld[0] + md[0]) / 2 + 1;
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        for (int c = 0; c <= 2 * top; ++c)
          for (int e = 0; e <= 2 * top; ++e) {
            const DominantWeight n(a, b, c, e);
            if (n.doubled()[0] > ld[0] + md[0]) continue;
            const auto k = tensor_multiplicity(l, m, n);
            if (k) total += k * weyl_dimension(n);
          }
    EXPECT_EQ(total, weyl_dimension(l) * weyl_dimension(m)) << l.str() << " x " << m.str();
  }
}

TEST(RepTensor, GeneratorsAndMultiples) {
  const auto& d = eigencone_data();
  std::vector<DominantTriple> reps;
  for (const auto& o : d.orbits) reps.push_back(to_dominant_triple(triple_from_fundamental(o.representative)));
  const auto rep = verify_generators(reps);
  EXPECT_TRUE(rep.all_positive());
  ASSERT_EQ(rep.checks.size(), 10u);
  for (const auto& t : reps)
    for (int n = 1; n <= 4; ++n) {
      DominantTriple s = t;
      for (auto& w : s)
        for (auto& c : w.a) c *= n;
      EXPECT_GT(invariant_dim(s[0], s[1], s[2]), 0);
      EXPECT_TRUE(contains(d.eps_cone, std::span<const Rational>(flatten(to_weight_triple(s)))));
    }
}

TEST(RepTensor, SaturationSample) {
  const auto& cone = eigencone_data().eps_cone;
  const auto rep = saturation_sample(200, 3, 42, cone);
  EXPECT_EQ(rep.samples.size(), 200u);
  EXPECT_TRUE(rep.ok());
  for (const auto& s : rep.samples) {
    for (const auto& w : s.triple)
      for (int c : w.a) {
        EXPECT_GE(c, 0);
        EXPECT_LE(c, 3);
      }
    EXPECT_NO_THROW(to_coords(to_weight_triple(s.triple)));
  }
  const auto again = saturation_sample(200, 3, 42, cone);
  for (std::size_t i = 0; i < 200; ++i) EXPECT_EQ(again.samples[i].triple, rep.samples[i].triple);
  // both sides false outside the cone
  const DominantTriple out{DominantWeight(2, 0, 0, 0), DominantWeight(), DominantWeight()};
  EXPECT_FALSE(contains(cone, std::span<const Rational>(flatten(to_weight_triple(out)))));
}
