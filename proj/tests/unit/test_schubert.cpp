#include "d4/schubert.hpp"
#include "d4/tables.hpp"

#include <gtest/gtest.h>

using namespace d4;

namespace {

struct Labeled {
  Parabolic p;
  const SchubertRing& ring;
  std::vector<std::string> labels;
  explicit Labeled(int i) : p(i), ring(schubert_ring(Parabolic(i))), labels(class_labels(Parabolic(i))) {}
  std::size_t idx(const std::string& l) const {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  }
  CohomologyElement of(const std::string& text) const { return parse_class_sum(p, text, labels); }
  std::string str(const CohomologyElement& c) const { return c.format(labels); }
};

}  // namespace

TEST(Schubert, GradedRanks) {
  const auto& r1 = schubert_ring(Parabolic(1));
  EXPECT_EQ(r1.betti(), (std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1}));
  EXPECT_EQ(schubert_ring(Parabolic(2)).size(), 24u);
  EXPECT_EQ(schubert_ring(Parabolic(2)).dimension(), 9);
}

TEST(Schubert, Chevalley) {
  Labeled p1(1);
  EXPECT_EQ(p1.str(p1.ring.chevalley_multiply(p1.of("b_1"))), "b_2");
  EXPECT_EQ(p1.str(p1.ring.chevalley_multiply(p1.of("b_2"))), "b_3^1 + b_3^2");
  Labeled p2(2);
  EXPECT_EQ(p2.str(p2.ring.chevalley_multiply(CohomologyElement::basis(p2.p, p2.ring.identity()))), "b_1");
}

TEST(Schubert, CupExamples) {
  Labeled p1(1);
  EXPECT_EQ(p1.str(p1.ring.cup(p1.idx("b_1"), p1.idx("b_1"))), "b_2");
  EXPECT_EQ(p1.str(p1.ring.cup(p1.idx("b_2"), p1.idx("b_2"))), "2b_4");
  Labeled p2(2);
  EXPECT_EQ(p2.str(p2.ring.cup(p2.idx("b_2^1"), p2.idx("b_2^2"))), "b_4^2");
  EXPECT_EQ(p2.ring.cup(p2.idx("b_2^1"), p2.idx("b_2^2")), p2.ring.odot(p2.idx("b_2^1"), p2.idx("b_2^2")));
}

TEST(Schubert, OdotExamples) {
  Labeled p2(2);
  EXPECT_EQ(p2.str(p2.ring.odot(p2.idx("b_2^1"), p2.idx("b_5^1"))), "b_7^1");
  EXPECT_TRUE(p2.ring.odot(p2.idx("b_3^1"), p2.idx("b_3^1")).is_zero());
  const auto& r1 = schubert_ring(Parabolic(1));
  for (std::size_t u = 0; u < r1.size(); ++u)
    for (std::size_t v = 0; v < r1.size(); ++v) EXPECT_EQ(r1.cup(u, v), r1.odot(u, v));
}

TEST(Schubert, PoincareDual) {
  Labeled p2(2);
  EXPECT_EQ(p2.ring.poincare_dual(p2.idx("b_0")), p2.idx("b_9"));
  EXPECT_EQ(p2.ring.poincare_dual(p2.idx("b_4^1")), p2.idx("b_5^1"));
  EXPECT_EQ(p2.ring.reps()[p2.idx("b_4^1")].word_string(), "s2s1s3s2");
  EXPECT_EQ(p2.ring.reps()[p2.idx("b_5^1")].word_string(), "s4s2s1s3s2");
  for (int i = 1; i <= 4; ++i) {
    const auto& r = schubert_ring(Parabolic(i));
    for (std::size_t u = 0; u < r.size(); ++u) {
      EXPECT_EQ(r.poincare_dual(r.poincare_dual(u)), u);
      EXPECT_EQ(r.degree(u) + r.degree(r.poincare_dual(u)), r.dimension());
      EXPECT_EQ(r.lambda(r.poincare_dual(u)), -r.lambda(u));
      EXPECT_EQ(r.level(r.poincare_dual(u)), -r.level(u));
    }
  }
}

TEST(Schubert, MinusculeLevels) {
  const auto& r = schubert_ring(Parabolic(1));
  for (std::size_t u = 0; u < r.size(); ++u) EXPECT_EQ(r.level(u), 3 - r.degree(u));
  EXPECT_EQ(schubert_ring(Parabolic(2)).rho_level(), 5);
}

TEST(Schubert, ChartValue) {
  Labeled p2(2);
  const auto k = p2.idx("b_4^4");
  EXPECT_EQ(p2.ring.lambda(k), Weight(1, -1, 0, 0));
  EXPECT_EQ(p2.ring.level(k), 1);
}

TEST(Schubert, Properties) {
  for (int i = 1; i <= 4; ++i) {
    const auto& r = schubert_ring(Parabolic(i));
    const std::size_t n = r.size();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        EXPECT_EQ(r.cup(u, v), r.cup(v, u));
        EXPECT_EQ(r.odot(u, v), r.odot(v, u));
        for (std::size_t w = 0; w < n; ++w) {
          EXPECT_GE(r.cup(u, v)[w], 0);
          if (r.cup(u, v)[w] != 0) {
            EXPECT_EQ(r.degree(w), r.degree(u) + r.degree(v));
            EXPECT_EQ(r.odot_keeps_by_rho(u, v, w), r.odot_keeps_by_level(u, v, w));
            EXPECT_EQ(r.odot(u, v)[w] != 0, r.odot_keeps_by_level(u, v, w));
          }
        }
      }
  }
}

TEST(Schubert, StructureConstantsByPairing) {
  const auto& r = schubert_ring(Parabolic(2));
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      for (std::size_t w = 0; w < r.size(); ++w) EXPECT_EQ(r.structure_constant_by_pairing(u, v, w), r.cup(u, v)[w]);
}

TEST(Schubert, VanishingPattern) {
  const auto& r = schubert_ring(Parabolic(2));
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v) {
      const int a = r.degree(u), b = r.degree(v);
      if (a + b <= 4 || std::max(a, b) >= 5) {
        EXPECT_EQ(r.odot(u, v), r.cup(u, v)) << u << "," << v;
      } else {
        EXPECT_TRUE(r.odot(u, v).is_zero()) << u << "," << v;
      }
    }
}

TEST(Schubert, Errors) {
  const auto& r1 = schubert_ring(Parabolic(1));
  const auto& r2 = schubert_ring(Parabolic(2));
  EXPECT_THROW(cup_product(r1.schubert_class(1), r2.schubert_class(1)), Error);
  EXPECT_THROW(SchubertClass(Parabolic(1), WeylElement::simple_reflection(2)), Error);
  EXPECT_THROW(Parabolic(7), Error);
}

TEST(Schubert, DynkinTransport) {
  EXPECT_TRUE(dynkin_transport_diffs(3).empty());
  EXPECT_TRUE(dynkin_transport_diffs(4).empty());
}
