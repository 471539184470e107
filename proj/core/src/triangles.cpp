#include "d4/triangles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace d4 {

std::string to_string(InequalityKind k) {
  switch (k) {
    case InequalityKind::kWTI: return "WTI";
    case InequalityKind::kETI: return "ETI";
    default: return "CHAMBER";
  }
}

LinearInequality::LinearInequality(IntVector coefficients, std::variant<ChamberSource, TriangleSource> source,
                                   InequalityKind kind)
    : coefficients_(primitive(std::span<const Integer>(coefficients))), source_(source), kind_(kind) {
  ensure(coefficients_.size() == kTripleDim, "inequality must have 12 coefficients");
}

int LinearInequality::parabolic() const {
  if (const auto* t = std::get_if<TriangleSource>(&source_)) return t->parabolic;
  return 0;
}

Rational LinearInequality::evaluate(std::span<const Rational> point) const {
  ensure(point.size() == kTripleDim, "evaluate: point must have 12 coordinates");
  Rational s = 0;
  for (std::size_t i = 0; i < kTripleDim; ++i) s += coefficients_[i] * point[i];
  return s;
}

std::string format_functional(std::span<const Integer> c) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::string var = std::string(names[i % 4]) + std::to_string(i / 4 + 1);
    const Integer mag = abs(c[i]);
    if (s.empty()) {
      if (c[i] < 0) s += "-";
    } else {
      s += c[i] < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str();
    s += var;
  }
  return (s.empty() ? "0" : s) + " >= 0";
}

std::string LinearInequality::str() const { return format_functional(coefficients_); }

std::vector<ClassTriple> enumerate_deepest_triples(Parabolic p) {
  const SchubertRing& ring = schubert_ring(p);
  const std::size_t n = ring.size();
  const int dim = ring.dimension();
  std::vector<ClassTriple> triples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const CohomologyElement& ab = ring.odot(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (ring.degree(a) + ring.degree(b) + ring.degree(c) != dim) continue;
        Integer top = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (ab[k] != 0) top += ab[k] * ring.odot(k, c)[ring.top()];
        if (top == 1) triples.push_back({a, b, c});
      }
    }
  return triples;
}

namespace {

LinearInequality make_triangle(Parabolic p, const ClassTriple& t) {
  const SchubertRing& ring = schubert_ring(p);
  RatVector coeffs;
  for (std::size_t j = 0; j < 3; ++j) {
    const Weight& l = ring.lambda(t[j]);
    for (int i = 0; i < 4; ++i) coeffs.push_back(l[i]);
  }
  const bool weak = std::any_of(t.begin(), t.end(), [&](std::size_t c) { return c == ring.identity(); });
  return LinearInequality(primitive(std::span<const Rational>(coeffs)), TriangleSource{p.node(), t},
                          weak ? InequalityKind::kWTI : InequalityKind::kETI);
}

}  // namespace

LinearInequality inequality_of(Parabolic p, const ClassTriple& triple) { return make_triangle(p, triple); }

std::vector<LinearInequality> triangle_inequalities(Parabolic p) {
  std::vector<LinearInequality> out;
  for (const auto& t : enumerate_deepest_triples(p)) out.push_back(make_triangle(p, t));
  return out;
}

std::vector<LinearInequality> extended_triangle_inequalities(Parabolic p) {
  const SchubertRing& ring = schubert_ring(p);
  const std::size_t n = ring.size();
  std::vector<LinearInequality> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (ring.degree(a) + ring.degree(b) + ring.degree(c) != ring.dimension()) continue;
        Integer top = 0;
        const CohomologyElement& ab = ring.cup(a, b);
        for (std::size_t k = 0; k < n; ++k)
          if (ab[k] != 0) top += ab[k] * ring.cup(k, c)[ring.top()];
        if (top == 1) out.push_back(make_triangle(p, {a, b, c}));
      }
  return out;
}

std::vector<LinearInequality> chamber_inequalities() {
  std::vector<LinearInequality> out;
  for (int f = 0; f < 3; ++f) {
    const std::size_t o = static_cast<std::size_t>(4 * f);
    for (int k = 0; k < 4; ++k) {
      IntVector c(kTripleDim);
      switch (k) {
        case 0: c[o] = 1; c[o + 1] = -1; break;
        case 1: c[o + 1] = 1; c[o + 2] = -1; break;
        case 2: c[o + 2] = 1; c[o + 3] = -1; break;
        default: c[o + 2] = 1; c[o + 3] = 1; break;
      }
      out.emplace_back(c, ChamberSource{f, k}, InequalityKind::kChamber);
    }
  }
  return out;
}

const std::vector<LinearInequality>& full_system() {
  static const std::vector<LinearInequality> system = [] {
    std::vector<LinearInequality> all;
    for (int i = 1; i <= 4; ++i) {
      auto part = triangle_inequalities(Parabolic(i));
      all.insert(all.end(), part.begin(), part.end());
    }
    auto chamber = chamber_inequalities();
    all.insert(all.end(), chamber.begin(), chamber.end());
    return all;
  }();
  return system;
}

std::vector<IntVector> full_system_functionals() {
  std::vector<IntVector> f;
  for (const auto& ineq : full_system()) f.push_back(ineq.coefficients());
  return f;
}

// --- Symmetry --------------------------------------------------------------

std::vector<TripleSymmetry> symmetry_elements(SymmetryGroup g) {
  std::vector<TripleSymmetry> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    if (g == SymmetryGroup::kS3) {
      out.push_back({perm, DiagramAutomorphism()});
    } else {
      for (const auto& a : diagram_automorphisms()) out.push_back({perm, a});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

IntVector act_on_functional(const TripleSymmetry& g, std::span<const Integer> f) {
  ensure(f.size() == kTripleDim, "act_on_functional: need 12 coordinates");
  RatVector out(kTripleDim);
  for (std::size_t b = 0; b < 3; ++b) {
    Weight block(f[4 * b], f[4 * b + 1], f[4 * b + 2], f[4 * b + 3]);
    const Weight img = g.automorphism.apply(block);
    const auto dst = static_cast<std::size_t>(g.slots[b]);
    for (int i = 0; i < 4; ++i) out[4 * dst + static_cast<std::size_t>(i)] = img[i];
  }
  return primitive(std::span<const Rational>(out));
}

std::array<Weight, 3> act_on_triple(const TripleSymmetry& g, const std::array<Weight, 3>& t) {
  std::array<Weight, 3> out;
  for (std::size_t b = 0; b < 3; ++b) out[static_cast<std::size_t>(g.slots[b])] = g.automorphism.apply(t[b]);
  return out;
}

std::vector<std::size_t> OrbitDecomposition::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& o : orbits) s.push_back(o.size());
  return s;
}

OrbitDecomposition orbit_decompose(std::span<const LinearInequality> system, SymmetryGroup g) {
  const auto group = symmetry_elements(g);
  std::map<IntVector, std::vector<std::size_t>, IntVectorLess> by_vector;
  for (std::size_t i = 0; i < system.size(); ++i) by_vector[system[i].coefficients()].push_back(i);

  OrbitDecomposition dec{g, {}};
  std::set<IntVector, IntVectorLess> done;
  for (const auto& [vec, idx] : by_vector) {
    if (done.count(vec)) continue;
    std::set<IntVector, IntVectorLess> orbit;
    for (const auto& s : group) orbit.insert(act_on_functional(s, vec));
    Orbit o;
    o.representative = *orbit.begin();
    for (const auto& v : orbit) {
      auto it = by_vector.find(v);
      if (it == by_vector.end())
        fail(ErrorCode::kInvalidArgument, "system is not closed under the symmetry group: missing " + format_functional(v));
      o.members.insert(o.members.end(), it->second.begin(), it->second.end());
      done.insert(v);
    }
    std::sort(o.members.begin(), o.members.end());
    dec.orbits.push_back(std::move(o));
  }
  std::sort(dec.orbits.begin(), dec.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return lex_compare(a.representative, b.representative) < 0; });
  return dec;
}

std::vector<LinearInequality> select(std::span<const LinearInequality> system, int parabolic, InequalityKind kind) {
  std::vector<LinearInequality> out;
  for (const auto& i : system)
    if (i.parabolic() == parabolic && i.kind() == kind) out.push_back(i);
  return out;
}

}  // namespace d4
