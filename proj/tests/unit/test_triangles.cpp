#include "d4/triangles.hpp"
#include "d4/tables.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace d4;

namespace {

std::size_t label_index(int p, const std::string& l) {
  const auto labels = class_labels(Parabolic(p));
  return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
}

ClassTriple triple(int p, const std::string& a, const std::string& b, const std::string& c) {
  return {label_index(p, a), label_index(p, b), label_index(p, c)};
}

}  // namespace

TEST(Triangles, DeepestTripleCounts) {
  EXPECT_EQ(enumerate_deepest_triples(Parabolic(1)).size(), 36u);
  EXPECT_EQ(enumerate_deepest_triples(Parabolic(2)).size(), 186u);
  EXPECT_EQ(enumerate_deepest_triples(Parabolic(3)).size(), 36u);
  EXPECT_EQ(enumerate_deepest_triples(Parabolic(4)).size(), 36u);
  const auto t = enumerate_deepest_triples(Parabolic(1));
  EXPECT_NE(std::find(t.begin(), t.end(), triple(1, "b_0", "b_0", "b_6")), t.end());
  EXPECT_NE(std::find(t.begin(), t.end(), triple(1, "b_1", "b_1", "b_4")), t.end());
}

TEST(Triangles, InequalityExamples) {
  EXPECT_EQ(inequality_of(Parabolic(1), triple(1, "b_1", "b_1", "b_4")).str(), "y1 + y2 - z3 >= 0");
  EXPECT_EQ(inequality_of(Parabolic(1), triple(1, "b_1", "b_2", "b_3^1")).str(), "y1 + z2 + w3 >= 0");
  EXPECT_EQ(inequality_of(Parabolic(2), triple(2, "b_1", "b_1", "b_7^1")).str(), "x1 + z1 + x2 + z2 - y3 - z3 >= 0");
  const auto wti = inequality_of(Parabolic(1), triple(1, "b_0", "b_0", "b_6"));
  EXPECT_EQ(wti.kind(), InequalityKind::kWTI);
  EXPECT_EQ(inequality_of(Parabolic(1), triple(1, "b_1", "b_1", "b_4")).kind(), InequalityKind::kETI);
}

TEST(Triangles, Chamber) {
  const auto ch = chamber_inequalities();
  ASSERT_EQ(ch.size(), 12u);
  EXPECT_EQ(ch[0].str(), "x1 - y1 >= 0");
  EXPECT_EQ(ch[3].str(), "z1 + w1 >= 0");
  RatVector rho3, zero(12);
  for (int k = 0; k < 3; ++k)
    for (int v : {3, 2, 1, 0}) rho3.push_back(v);
  for (const auto& i : ch) {
    EXPECT_TRUE(i.holds_at(rho3));
    EXPECT_EQ(i.evaluate(zero), 0);
  }
}

TEST(Triangles, FullSystemBreakdown) {
  const auto& sys = full_system();
  ASSERT_EQ(sys.size(), 306u);
  const std::size_t eti[] = {15, 117, 15, 15}, wti[] = {21, 69, 21, 21};
  for (int p = 1; p <= 4; ++p) {
    EXPECT_EQ(select(sys, p, InequalityKind::kETI).size(), eti[p - 1]);
    EXPECT_EQ(select(sys, p, InequalityKind::kWTI).size(), wti[p - 1]);
  }
  std::set<IntVector, IntVectorLess> distinct;
  for (const auto& i : sys) distinct.insert(i.coefficients());
  EXPECT_EQ(distinct.size(), 306u);
}

TEST(Triangles, WtiHasOmegaBlock) {
  for (const auto& i : full_system()) {
    if (i.kind() != InequalityKind::kWTI) continue;
    const auto& src = std::get<TriangleSource>(i.source());
    const auto& ring = schubert_ring(Parabolic(src.parabolic));
    bool found = false;
    for (std::size_t c : src.classes) found = found || (c == ring.identity() && ring.lambda(c) == Parabolic(src.parabolic).omega());
    EXPECT_TRUE(found);
  }
}

TEST(Triangles, SymmetryClosure) {
  std::set<IntVector, IntVectorLess> all;
  for (const auto& i : full_system()) all.insert(i.coefficients());
  for (const auto& g : symmetry_elements(SymmetryGroup::kS3xF))
    for (const auto& v : all) EXPECT_TRUE(all.count(act_on_functional(g, v)));
  for (int node : {3, 4}) {
    const TripleSymmetry g{{0, 1, 2}, DiagramAutomorphism::transposition(1, node)};
    std::set<IntVector, IntVectorLess> image, direct;
    for (const auto& i : full_system()) {
      if (i.parabolic() == 1) image.insert(act_on_functional(g, i.coefficients()));
      if (i.parabolic() == node) direct.insert(i.coefficients());
    }
    EXPECT_EQ(image, direct);
  }
}

TEST(Triangles, OrbitSizes) {
  const auto& sys = full_system();
  auto sizes = [&](int p, InequalityKind k, SymmetryGroup g) {
    auto s = orbit_decompose(select(sys, p, k), g).sizes();
    std::sort(s.begin(), s.end());
    return s;
  };
  using V = std::vector<std::size_t>;
  EXPECT_EQ(sizes(1, InequalityKind::kETI, SymmetryGroup::kS3), (V{3, 6, 6}));
  EXPECT_EQ(sizes(1, InequalityKind::kWTI, SymmetryGroup::kS3), (V{3, 6, 6, 6}));
  EXPECT_EQ(sizes(2, InequalityKind::kETI, SymmetryGroup::kS3xF), (V{9, 18, 18, 18, 18, 36}));
  EXPECT_EQ(sizes(2, InequalityKind::kWTI, SymmetryGroup::kS3xF), (V{3, 6, 6, 18, 18, 18}));
  std::vector<LinearInequality> triangles;
  for (const auto& i : sys)
    if (i.kind() != InequalityKind::kChamber) triangles.push_back(i);
  const auto dec = orbit_decompose(triangles, SymmetryGroup::kS3xF);
  std::size_t total = 0;
  for (auto s : dec.sizes()) {
    EXPECT_EQ(36 % s, 0u);
    total += s;
  }
  EXPECT_EQ(total, 294u);
}

TEST(Triangles, OrbitDecomposeRejectsOpenSets) {
  const auto p1 = select(full_system(), 1, InequalityKind::kETI);
  std::vector<LinearInequality> part(p1.begin(), p1.begin() + 1);
  EXPECT_THROW(orbit_decompose(part, SymmetryGroup::kS3), Error);
}

TEST(Triangles, ExtendedSystemContainsOdotSystem) {
  for (int p = 1; p <= 2; ++p) {
    std::set<IntVector, IntVectorLess> ext;
    for (const auto& i : extended_triangle_inequalities(Parabolic(p))) ext.insert(i.coefficients());
    for (const auto& i : triangle_inequalities(Parabolic(p))) EXPECT_TRUE(ext.count(i.coefficients()));
  }
}
