#include "d4/cone.hpp"

#include "d4/linalg.hpp"
#include "d4/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace d4 {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector x;
  IntVector slack;  // A x over every constraint
  Bitset zero;      // processed constraints with slack 0
};

IntVector mat_vec(const std::vector<IntVector>& a, const IntVector& x) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

void normalise(Ray& r) {
  const Integer g = content(r.x);
  if (g > 1) {
    for (auto& c : r.x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : r.slack) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

HRep HRep::from(std::vector<IntVector> functionals) {
  HRep h;
  ensure(!functionals.empty(), "HRep::from needs at least one functional to fix the dimension");
  h.dim = functionals.front().size();
  for (auto& f : functionals) {
    ensure(f.size() == h.dim, "HRep: functionals of different lengths");
    h.functionals.push_back(primitive(std::span<const Integer>(f)));
  }
  return h;
}

HRep HRep::deduplicated() const {
  HRep out;
  out.dim = dim;
  std::set<IntVector, IntVectorLess> seen;
  for (const auto& f : functionals) {
    IntVector p = primitive(std::span<const Integer>(f));
    if (seen.insert(p).second) out.functionals.push_back(std::move(p));
  }
  return out;
}

VRep double_description(const HRep& h) {
  VRep out;
  out.dim = h.dim;
  std::vector<IntVector> a;
  for (const auto& f : h.deduplicated().functionals)
    if (!std::all_of(f.begin(), f.end(), [](const Integer& c) { return c == 0; })) a.push_back(f);
  const std::size_t m = a.size();
  const std::size_t d = h.dim;

  if (m == 0) {
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d);
      e[i] = 1;
      out.lineality.push_back(e);
    }
    return out;
  }

  RatMatrix am(m, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) am(i, j) = a[i][j];
  out.lineality = integer_kernel(am);

  // Simplicial start inside the row space: B r_i = e_i.
  const auto basis_rows = independent_subset(a);
  const std::size_t r = basis_rows.size();
  RatMatrix b(r, d);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < d; ++j) b(i, j) = a[basis_rows[i]][j];
  const auto gram_inv = inverse(b * b.transposed());
  ensure(gram_inv.has_value(), "double_description: singular Gram matrix");
  const RatMatrix right = b.transposed() * *gram_inv;

  std::vector<bool> processed(m, false);
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < r; ++i) {
    Ray ray;
    ray.x = primitive(std::span<const Rational>(right.column(i)));
    ray.slack = mat_vec(a, ray.x);
    ray.zero = Bitset(m);
    rays.push_back(std::move(ray));
  }
  for (std::size_t i : basis_rows) processed[i] = true;
  for (auto& ray : rays)
    for (std::size_t i : basis_rows)
      if (ray.slack[i] == 0) ray.zero.set(i);

  for (std::size_t step = r; step < m; ++step) {
    // Next constraint: the one cutting off the most current rays (ties go to
    // the lowest index). Fewest-pairs ordering blows up to >10^4 rays here.
    std::size_t best = m;
    std::size_t best_cut = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (processed[j]) continue;
      std::size_t neg = 0;
      for (const auto& ray : rays) neg += sgn(ray.slack[j]) < 0;
      if (best == m || neg > best_cut) {
        best = j;
        best_cut = neg;
      }
    }
    const std::size_t j = best;

    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const int s = sgn(rays[k].slack[j]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
    }
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        const Bitset common = rays[p].zero & rays[n].zero;
        if (r >= 2 && common.count() < r - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != n && common.subset_of(rays[k].zero)) adjacent = false;
        if (!adjacent) continue;
        const Integer sp = rays[p].slack[j];
        const Integer sn = -rays[n].slack[j];
        Ray ray;
        ray.x.resize(d);
        for (std::size_t c = 0; c < d; ++c) ray.x[c] = sp * rays[n].x[c] + sn * rays[p].x[c];
        ray.slack.resize(m);
        for (std::size_t c = 0; c < m; ++c) ray.slack[c] = sp * rays[n].slack[c] + sn * rays[p].slack[c];
        normalise(ray);
        ray.zero = common;
        ray.zero.set(j);
        next.push_back(std::move(ray));
      }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const int s = sgn(rays[k].slack[j]);
      if (s < 0) continue;
      if (s == 0) rays[k].zero.set(j);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
    processed[j] = true;
  }

  for (auto& ray : rays) out.rays.push_back(std::move(ray.x));
  std::sort(out.rays.begin(), out.rays.end(), IntVectorLess());
  return out;
}

std::size_t cone_dimension(const VRep& v) {
  std::vector<IntVector> all = v.rays;
  all.insert(all.end(), v.lineality.begin(), v.lineality.end());
  return all.empty() ? 0 : rank(all);
}

std::size_t FacetAnalysis::merged() const {
  std::size_t k = 0;
  for (const auto& f : facets) k += f.inputs.size() - 1;
  return k;
}

FacetAnalysis facets(const HRep& h, const VRep& v) {
  FacetAnalysis out;
  out.cone_dim = cone_dimension(v);
  const std::size_t m = h.functionals.size();
  std::vector<std::vector<std::size_t>> tight(m);
  std::vector<char> is_facet(m, 0);
  parallel_for(m, [&](std::size_t i) {
    std::vector<IntVector> span_set = v.lineality;
    for (std::size_t k = 0; k < v.rays.size(); ++k)
      if (dot(h.functionals[i], v.rays[k]) == 0) {
        tight[i].push_back(k);
        span_set.push_back(v.rays[k]);
      }
    const std::size_t rk = span_set.empty() ? 0 : rank(span_set);
    is_facet[i] = out.cone_dim > 0 && rk + 1 == out.cone_dim;
  });
  std::map<std::vector<std::size_t>, std::size_t> by_tight;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_facet[i]) {
      out.non_facets.push_back(i);
      continue;
    }
    auto [it, inserted] = by_tight.try_emplace(tight[i], out.facets.size());
    if (inserted)
      out.facets.push_back({h.functionals[i], {i}, tight[i]});
    else
      out.facets[it->second].inputs.push_back(i);
  }
  return out;
}

FacetAnalysis facets(const HRep& h) { return facets(h, double_description(h)); }

IrredundancyCertificate is_irredundant(const HRep& h, const VRep& v) {
  const FacetAnalysis fa = facets(h, v);
  IrredundancyCertificate cert;
  cert.cone_dim = fa.cone_dim;
  cert.ray_count = v.rays.size();
  cert.witnesses.resize(h.functionals.size());
  cert.redundant = fa.non_facets;
  for (const auto& f : fa.facets) {
    std::vector<IntVector> vecs = v.lineality;
    for (std::size_t k : f.tight_rays) vecs.push_back(v.rays[k]);
    std::vector<std::size_t> witness;
    for (std::size_t idx : independent_subset(vecs))
      if (idx >= v.lineality.size()) witness.push_back(f.tight_rays[idx - v.lineality.size()]);
    for (std::size_t i : f.inputs) cert.witnesses[i] = witness;
    for (std::size_t k = 1; k < f.inputs.size(); ++k) cert.duplicates.push_back({f.inputs[k], f.inputs[0]});
  }
  cert.irredundant = cert.redundant.empty() && cert.duplicates.empty();
  return cert;
}

IrredundancyCertificate is_irredundant(const HRep& h) { return is_irredundant(h, double_description(h)); }

std::string IrredundancyCertificate::text(const HRep& h, const VRep& v) const {
  std::ostringstream out;
  out << "# cone dimension " << cone_dim << ", " << ray_count << " extremal rays, " << h.functionals.size()
      << " functionals\n";
  out << "# verdict: " << (irredundant ? "irredundant" : "redundant") << "\n";
  for (std::size_t k = 0; k < v.rays.size(); ++k) out << "ray " << k << ": " << to_string(v.rays[k]) << "\n";
  for (std::size_t i = 0; i < h.functionals.size(); ++i) {
    out << "functional " << i << ": " << to_string(h.functionals[i]);
    if (witnesses[i].empty()) {
      out << " not a facet\n";
      continue;
    }
    out << " tight rays";
    for (std::size_t k : witnesses[i]) out << " " << k;
    out << "\n";
  }
  for (const auto& [later, earlier] : duplicates)
    out << "duplicate: functional " << later << " defines the same facet as " << earlier << "\n";
  return out.str();
}

bool contains(const HRep& h, std::span<const Rational> point) { return !first_violated(h, point).has_value(); }

bool contains(const HRep& h, std::span<const Integer> point) {
  for (const auto& f : h.functionals)
    if (dot(f, point) < 0) return false;
  return true;
}

std::optional<std::size_t> first_violated(const HRep& h, std::span<const Rational> point) {
  ensure(point.size() == h.dim, "cone membership: dimension mismatch");
  for (std::size_t i = 0; i < h.functionals.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < h.dim; ++j) s += h.functionals[i][j] * point[j];
    if (s < 0) return i;
  }
  return std::nullopt;
}

namespace {

nlohmann::json int_rows(const std::vector<IntVector>& rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : r) row.push_back(to_int64(c));
    a.push_back(row);
  }
  return a;
}

std::vector<IntVector> read_rows(const nlohmann::json& a) {
  std::vector<IntVector> rows;
  for (const auto& r : a) {
    IntVector row;
    for (const auto& c : r) row.emplace_back(c.get<long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string hrep_json(const HRep& h) {
  return nlohmann::json({{"dim", h.dim}, {"functionals", int_rows(h.functionals)}}).dump() + "\n";
}

std::string vrep_json(const VRep& v) {
  return nlohmann::json({{"dim", v.dim}, {"rays", int_rows(v.rays)}, {"lineality", int_rows(v.lineality)}}).dump() +
         "\n";
}

HRep read_hrep_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  HRep h;
  h.dim = j.at("dim").get<std::size_t>();
  h.functionals = read_rows(j.at("functionals"));
  return h;
}

VRep read_vrep_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  VRep v;
  v.dim = j.at("dim").get<std::size_t>();
  v.rays = read_rows(j.at("rays"));
  if (j.contains("lineality")) v.lineality = read_rows(j.at("lineality"));
  return v;
}

}  // namespace d4
