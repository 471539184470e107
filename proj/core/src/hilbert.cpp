#include "d4/hilbert.hpp"

#include "d4/linalg.hpp"
#include "d4/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace d4 {

// --- Lattice ---------------------------------------------------------------

const std::vector<WeightTriple>& lattice_basis() {
  static const std::vector<WeightTriple> basis = [] {
    std::vector<WeightTriple> b;
    for (int i = 1; i <= 4; ++i) b.push_back({simple_root(i), Weight(), Weight()});
    for (int j = 1; j <= 4; ++j) b.push_back({-fundamental_weight(j), fundamental_weight(j), Weight()});
    for (int j = 1; j <= 4; ++j) b.push_back({-fundamental_weight(j), Weight(), fundamental_weight(j)});
    return b;
  }();
  return basis;
}

RatVector flatten(const WeightTriple& t) {
  RatVector v;
  for (const auto& w : t)
    for (int i = 0; i < 4; ++i) v.push_back(w[i]);
  return v;
}

WeightTriple unflatten(std::span<const Rational> v) {
  ensure(v.size() == 12, "unflatten: need 12 coordinates");
  WeightTriple t;
  for (std::size_t s = 0; s < 3; ++s)
    for (int i = 0; i < 4; ++i) t[s][i] = v[4 * s + static_cast<std::size_t>(i)];
  return t;
}

namespace {

const RatMatrix& basis_rational() {
  static const RatMatrix m = [] {
    std::vector<RatVector> cols;
    for (const auto& t : lattice_basis()) cols.push_back(flatten(t));
    return RatMatrix::from_columns(cols);
  }();
  return m;
}

const RatMatrix& basis_inverse() {
  static const RatMatrix inv = [] {
    auto i = inverse(basis_rational());
    ensure(i.has_value(), "lattice basis is singular");
    return *i;
  }();
  return inv;
}

}  // namespace

const IntMatrix& lattice_basis_matrix() {
  static const IntMatrix m = [] {
    const RatMatrix& r = basis_rational();
    IntMatrix out(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) {
        const Rational q = 2 * r(i, j);
        ensure(q.get_den() == 1, "lattice basis has non half-integral entries");
        out(i, j) = q.get_num();
      }
    return out;
  }();
  return m;
}

IntVector to_coords(const WeightTriple& t) {
  for (std::size_t s = 0; s < 3; ++s)
    if (!in_weight_lattice(t[s]))
      fail(ErrorCode::kNotInWeightLattice, "slot " + std::to_string(s + 1) + " weight " + t[s].str() +
                                               " is not in the weight lattice");
  if (!in_root_lattice(t[0] + t[1] + t[2]))
    fail(ErrorCode::kSumNotInRootLattice, "sum " + (t[0] + t[1] + t[2]).str() + " is not in the root lattice");
  const RatVector c = basis_inverse() * flatten(t);
  IntVector out;
  for (const auto& q : c) {
    ensure(q.get_den() == 1, "lattice coordinates are not integral");
    out.push_back(q.get_num());
  }
  return out;
}

WeightTriple from_coords(std::span<const Integer> coords) {
  ensure(coords.size() == 12, "from_coords: need 12 coordinates");
  RatVector c(coords.begin(), coords.end());
  return unflatten(basis_rational() * c);
}

IntVector fundamental_coords(const WeightTriple& t) {
  IntVector out;
  for (const auto& w : t)
    for (const auto& a : fundamental_coords(w)) {
      if (a.get_den() != 1) fail(ErrorCode::kNotInWeightLattice, w.str() + " is not in the weight lattice");
      out.push_back(a.get_num());
    }
  return out;
}

WeightTriple triple_from_fundamental(std::span<const Integer> a) {
  ensure(a.size() == 12, "triple_from_fundamental: need 12 coordinates");
  WeightTriple t;
  for (std::size_t s = 0; s < 3; ++s) {
    std::array<Rational, 4> q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = a[4 * s + i];
    t[s] = from_fundamental_coords(std::span<const Rational>(q));
  }
  return t;
}

std::string triple_string(const WeightTriple& t) {
  const IntVector a = fundamental_coords(t);
  std::string s = "(";
  for (std::size_t slot = 0; slot < 3; ++slot) {
    if (slot) s += ", ";
    std::string part;
    for (std::size_t i = 0; i < 4; ++i) {
      const Integer& c = a[4 * slot + i];
      if (c == 0) continue;
      if (!part.empty()) part += "+";
      if (c != 1) part += c.get_str();
      part += "w" + std::to_string(i + 1);
    }
    s += part.empty() ? "0" : part;
  }
  return s + ")";
}

LatticeTriple LatticeTriple::from_weights(const WeightTriple& t) { return {t, to_coords(t)}; }

LatticeTriple LatticeTriple::from_coords(std::span<const Integer> c) {
  return {d4::from_coords(c), IntVector(c.begin(), c.end())};
}

HRep to_lattice_coords(const HRep& eps_cone) {
  ensure(eps_cone.dim == 12, "to_lattice_coords: expected a cone in Q^12");
  const RatMatrix bt = basis_rational().transposed();
  HRep out;
  out.dim = 12;
  for (const auto& f : eps_cone.functionals) {
    const RatVector g = bt * to_rational(f);
    out.functionals.push_back(primitive(std::span<const Rational>(g)));
  }
  return out;
}

// --- Triangulation ---------------------------------------------------------

namespace {

struct RaySet {
  std::vector<std::uint64_t> w;
  explicit RaySet(std::size_t n = 0) : w((n + 63) / 64) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1U; }
  RaySet operator&(const RaySet& o) const {
    RaySet r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= o.w[k];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool subset_of(const RaySet& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k]) return 64 * k + static_cast<std::size_t>(std::countr_zero(w[k]));
    return w.size() * 64;
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size() * 64; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }
  bool operator==(const RaySet&) const = default;
  bool operator<(const RaySet& o) const { return w < o.w; }
};

class PullingTriangulator {
 public:
  PullingTriangulator(const HRep& h, const VRep& v) : n_(v.rays.size()) {
    for (const auto& f : h.functionals) {
      RaySet z(n_);
      for (std::size_t k = 0; k < n_; ++k)
        if (dot(f, v.rays[k]) == 0) z.set(k);
      zero_sets_.push_back(z);
    }
  }

  std::vector<RaySet> run(std::size_t dim) {
    RaySet all(n_);
    for (std::size_t k = 0; k < n_; ++k) all.set(k);
    return triangulate(all, dim);
  }

 private:
  std::vector<RaySet> facets_of(const RaySet& face) const {
    std::set<RaySet> cand;
    for (const auto& z : zero_sets_) {
      RaySet g = face & z;
      if (!(g == face) && g.count() > 0) cand.insert(g);
    }
    std::vector<RaySet> list(cand.begin(), cand.end());
    std::vector<RaySet> maximal;
    for (std::size_t i = 0; i < list.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < list.size() && !dominated; ++j)
        dominated = j != i && list[i].subset_of(list[j]);
      if (!dominated) maximal.push_back(list[i]);
    }
    return maximal;
  }

  const std::vector<RaySet>& triangulate(const RaySet& face, std::size_t dim) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    std::vector<RaySet> out;
    const std::size_t c = face.count();
    ensure(c >= dim, "triangulation: face has fewer rays than its dimension");
    if (c == dim) {
      out.push_back(face);
    } else {
      const std::size_t apex = face.first();
      for (const RaySet& g : facets_of(face)) {
        if (g.test(apex)) continue;
        for (RaySet s : triangulate(g, dim - 1)) {
          s.set(apex);
          out.push_back(s);
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

  std::size_t n_;
  std::vector<RaySet> zero_sets_;
  std::map<RaySet, std::vector<RaySet>> memo_;
};

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const HRep& h, const VRep& v) {
  PullingTriangulator t(h, v);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : t.run(cone_dimension(v))) out.push_back(s.indices());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& generators) {
  const std::size_t d = generators.size();
  ensure(d > 0 && generators.front().size() == d, "parallelepiped_points: need d generators in Z^d");
  IntMatrix v(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) v(i, j) = generators[j][i];
  Integer det = determinant(v);
  ensure(det != 0, "parallelepiped_points: generators are dependent");
  if (abs(det) == 1) return {IntVector(d)};

  IntMatrix adj = adjugate(v);
  if (det < 0) {
    det = -det;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) adj(i, j) = -adj(i, j);
  }
  // Z^d / V Z^d is generated by the columns of U^{-1} with orders d_i.
  const SmithForm snf = smith_normal_form(v);
  const IntMatrix u_inv = adjugate(snf.left);
  const Integer det_u = determinant(snf.left);
  const auto inv = snf.invariants();

  std::vector<std::size_t> radix;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < d; ++i) {
    const Integer di = abs(inv[i]);
    if (di > 1) {
      active.push_back(i);
      radix.push_back(static_cast<std::size_t>(to_int64(di)));
    }
  }
  std::vector<std::size_t> k(radix.size(), 0);
  std::vector<IntVector> out;
  IntVector x(d), n(d), r(d);
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) x[i] = 0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      if (k[a] == 0) continue;
      const std::size_t col = active[a];
      for (std::size_t i = 0; i < d; ++i) x[i] += u_inv(i, col) * det_u * static_cast<long>(k[a]);
    }
    for (std::size_t i = 0; i < d; ++i) {
      n[i] = 0;
      for (std::size_t j = 0; j < d; ++j) n[i] += adj(i, j) * x[j];
      mpz_fdiv_r(r[i].get_mpz_t(), n[i].get_mpz_t(), det.get_mpz_t());
    }
    IntVector p(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) p[i] += v(i, j) * r[j];
      mpz_divexact(p[i].get_mpz_t(), p[i].get_mpz_t(), det.get_mpz_t());
    }
    out.push_back(std::move(p));

    std::size_t a = 0;
    while (a < k.size() && ++k[a] == radix[a]) k[a++] = 0;
    if (a == k.size()) break;
  }
  ensure(out.size() == static_cast<std::size_t>(to_int64(det)), "parallelepiped enumeration miscounted");
  return out;
}

// --- Hilbert basis ---------------------------------------------------------

std::vector<std::size_t> HilbertBasis::non_ray_elements() const {
  std::set<IntVector, IntVectorLess> ray_set(rays.begin(), rays.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!ray_set.count(elements[i])) out.push_back(i);
  return out;
}

HilbertBasis hilbert_basis(const HRep& h) { return hilbert_basis(h, double_description(h)); }

HilbertBasis hilbert_basis(const HRep& h, const VRep& v) {
  if (!v.pointed()) fail(ErrorCode::kNotPointed, "cone has a nontrivial lineality space");
  if (cone_dimension(v) != h.dim) fail(ErrorCode::kNotPointed, "cone is not full-dimensional");

  HilbertBasis out;
  out.rays = v.rays;
  const auto simplices = pulling_triangulation(h, v);
  out.simplicial_cones = simplices.size();

  std::vector<std::vector<IntVector>> points(simplices.size());
  std::vector<Integer> volumes(simplices.size());
  parallel_for(simplices.size(), [&](std::size_t s) {
    std::vector<IntVector> gens;
    for (std::size_t k : simplices[s]) gens.push_back(v.rays[k]);
    points[s] = parallelepiped_points(gens);
    volumes[s] = points[s].size();
  });

  std::set<IntVector, IntVectorLess> cand(v.rays.begin(), v.rays.end());
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    out.total_volume += volumes[s];
    for (auto& p : points[s])
      if (!std::all_of(p.begin(), p.end(), [](const Integer& c) { return c == 0; })) cand.insert(std::move(p));
  }
  out.candidates = cand.size();

  // Degree = sum of all functionals; A x is kept to make x - h in C a
  // componentwise comparison.
  struct Candidate {
    IntVector x;
    std::vector<long> ax;
    long degree;
  };
  std::vector<Candidate> list;
  for (const auto& x : cand) {
    Candidate c{x, {}, 0};
    for (const auto& f : h.functionals) {
      const long val = to_int64(dot(f, x));
      c.ax.push_back(val);
      c.degree += val;
    }
    list.push_back(std::move(c));
  }
  std::stable_sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });

  std::vector<const Candidate*> irreducible;
  for (const auto& c : list) {
    bool reducible = false;
    for (const Candidate* hb : irreducible) {
      if (hb->degree >= c.degree) break;
      bool inside = true;
      for (std::size_t i = 0; i < c.ax.size() && inside; ++i) inside = c.ax[i] >= hb->ax[i];
      if (inside) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(&c);
  }
  for (const Candidate* c : irreducible) out.elements.push_back(c->x);
  return out;
}

// --- Orbits ----------------------------------------------------------------

IntVector canonical_form(const WeightTriple& t, SymmetryGroup g) {
  IntVector best;
  for (const auto& s : symmetry_elements(g)) {
    IntVector a = fundamental_coords(act_on_triple(s, t));
    if (best.empty() || lex_compare(a, best) < 0) best = std::move(a);
  }
  return best;
}

std::vector<TripleOrbit> orbit_reduce(std::span<const WeightTriple> triples, SymmetryGroup g) {
  std::map<IntVector, std::vector<std::size_t>, IntVectorLess> by_rep;
  for (std::size_t i = 0; i < triples.size(); ++i) by_rep[canonical_form(triples[i], g)].push_back(i);
  std::vector<TripleOrbit> out;
  for (auto& [rep, members] : by_rep) out.push_back({rep, std::move(members)});
  return out;
}

const EigenconeData& eigencone_data() {
  static std::once_flag once;
  static std::unique_ptr<EigenconeData> data;
  std::call_once(once, [] {
    auto d = std::make_unique<EigenconeData>();
    d->eps_cone = HRep::from(full_system_functionals());
    d->eps_rays = double_description(d->eps_cone);
    d->lattice_cone = to_lattice_coords(d->eps_cone);
    VRep lat;
    lat.dim = 12;
    for (const auto& r : d->eps_rays.rays) {
      const RatVector c = basis_inverse() * to_rational(r);
      lat.rays.push_back(primitive(std::span<const Rational>(c)));
    }
    std::sort(lat.rays.begin(), lat.rays.end(), IntVectorLess());
    d->basis = hilbert_basis(d->lattice_cone, lat);
    for (const auto& e : d->basis.elements) d->basis_triples.push_back(from_coords(e));
    d->orbits = orbit_reduce(d->basis_triples, SymmetryGroup::kS3xF);
    data = std::move(d);
  });
  return *data;
}

namespace {

nlohmann::json fundamental_json(const WeightTriple& t) {
  const IntVector a = fundamental_coords(t);
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t s = 0; s < 3; ++s) {
    nlohmann::json slot = nlohmann::json::array();
    for (std::size_t i = 0; i < 4; ++i) slot.push_back(to_int64(a[4 * s + i]));
    out.push_back(slot);
  }
  return out;
}

}  // namespace

std::string hilbert_json(const EigenconeData& d) {
  std::vector<std::size_t> orbit_of(d.basis.elements.size());
  for (std::size_t o = 0; o < d.orbits.size(); ++o)
    for (std::size_t i : d.orbits[o].members) orbit_of[i] = o;
  const auto non_ray = d.basis.non_ray_elements();
  nlohmann::json elems = nlohmann::json::array();
  for (std::size_t i = 0; i < d.basis.elements.size(); ++i) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : d.basis.elements[i]) coords.push_back(to_int64(c));
    elems.push_back({{"coords", coords},
                     {"fundamental", fundamental_json(d.basis_triples[i])},
                     {"text", triple_string(d.basis_triples[i])},
                     {"extremal_ray", std::find(non_ray.begin(), non_ray.end(), i) == non_ray.end()},
                     {"orbit", orbit_of[i]}});
  }
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : d.orbits) {
    const WeightTriple t = triple_from_fundamental(o.representative);
    orbits.push_back({{"representative", fundamental_json(t)}, {"text", triple_string(t)}, {"size", o.size()}});
  }
  return nlohmann::json({{"size", d.basis.elements.size()},
                         {"extremal_rays", d.basis.rays.size()},
                         {"elements", elems},
                         {"orbits", orbits}})
             .dump(2) +
         "\n";
}

std::vector<WeightTriple> read_hilbert_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<WeightTriple> out;
  for (const auto& e : j.at("elements")) {
    IntVector a;
    for (const auto& slot : e.at("fundamental"))
      for (const auto& c : slot) a.emplace_back(c.get<long>());
    out.push_back(triple_from_fundamental(a));
  }
  return out;
}

std::string hilbert_markdown(const EigenconeData& d) {
  std::ostringstream out;
  out << "### Hilbert basis\n\n" << d.basis.elements.size() << " elements, " << d.basis.rays.size()
      << " extremal rays, " << d.orbits.size() << " orbits under S3 x F.\n\n";
  const auto non_ray = d.basis.non_ray_elements();
  out << "| representative | orbit size | extremal |\n|---|---|---|\n";
  for (const auto& o : d.orbits) {
    const bool ray = std::none_of(o.members.begin(), o.members.end(), [&](std::size_t i) {
      return std::find(non_ray.begin(), non_ray.end(), i) != non_ray.end();
    });
    out << "| " << triple_string(triple_from_fundamental(o.representative)) << " | " << o.size() << " | "
        << (ray ? "yes" : "no") << " |\n";
  }
  return out.str();
}

}  // namespace d4
