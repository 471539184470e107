#include "d4/schubert.hpp"

#include "d4/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace d4 {

// --- SchubertClass ---------------------------------------------------------

SchubertClass::SchubertClass(Parabolic p, WeylElement rep) : parabolic_(p), rep_(rep) {
  if (!is_min_coset_rep(rep_, parabolic_))
    fail(ErrorCode::kNotInCosetReps,
         rep_.word_string() + " is not a minimal coset representative for P" + std::to_string(p.node()));
}

// --- CohomologyElement -----------------------------------------------------

CohomologyElement::CohomologyElement(Parabolic p)
    : parabolic_(p), coeffs_(min_coset_reps(p).size()) {}

CohomologyElement::CohomologyElement(Parabolic p, std::vector<Integer> coeffs)
    : parabolic_(p), coeffs_(std::move(coeffs)) {
  ensure(coeffs_.size() == min_coset_reps(p).size(), "CohomologyElement: wrong coefficient count");
}

CohomologyElement CohomologyElement::basis(Parabolic p, std::size_t index) {
  CohomologyElement c(p);
  ensure(index < c.coeffs_.size(), "CohomologyElement::basis: index out of range");
  c.coeffs_[index] = 1;
  return c;
}

CohomologyElement CohomologyElement::of(const SchubertClass& c) {
  return basis(c.parabolic(), schubert_ring(c.parabolic()).index_of(c.rep()));
}

Integer CohomologyElement::coefficient(const WeylElement& w) const {
  return coeffs_[schubert_ring(parabolic_).index_of(w)];
}

bool CohomologyElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x == 0; });
}

int CohomologyElement::degree() const {
  const auto& reps = min_coset_reps(parabolic_);
  int deg = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const int d = reps[i].length();
    if (deg != -1 && d != deg) fail(ErrorCode::kInvalidArgument, "cohomology element is not homogeneous");
    deg = d;
  }
  return deg;
}

CohomologyElement CohomologyElement::operator+(const CohomologyElement& o) const {
  CohomologyElement r = *this;
  r += o;
  return r;
}

CohomologyElement& CohomologyElement::operator+=(const CohomologyElement& o) {
  if (!(parabolic_ == o.parabolic_)) fail(ErrorCode::kParabolicMismatch, "adding classes of different G/P");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CohomologyElement operator*(const Integer& k, const CohomologyElement& c) {
  CohomologyElement r = c;
  for (auto& x : r.coeffs_) x *= k;
  return r;
}

bool CohomologyElement::operator==(const CohomologyElement& o) const {
  return parabolic_ == o.parabolic_ && coeffs_ == o.coeffs_;
}

std::string CohomologyElement::format(const std::vector<std::string>& labels) const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (coeffs_[i] != 1) s += coeffs_[i].get_str();
    s += labels[i];
  }
  return s.empty() ? "0" : s;
}

// --- FlagCohomology --------------------------------------------------------

const FlagCohomology& FlagCohomology::instance() {
  static const FlagCohomology flag;
  return flag;
}

std::size_t FlagCohomology::index_of(const WeylElement& w) const {
  return static_cast<std::size_t>(index_by_code_[w.code()]);
}

FlagCohomology::FlagCohomology() : elements_(weyl_group()), index_by_code_(384, -1) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_by_code_[elements_[i].code()] = static_cast<int>(i);

  std::vector<WeylElement> reflections;
  std::vector<std::array<int, 4>> root_coords;
  for (const auto& beta : positive_roots()) {
    reflections.push_back(WeylElement::reflection(beta));
    std::array<int, 4> c{};
    const auto q = simple_root_coords(beta);
    for (std::size_t i = 0; i < 4; ++i) c[i] = static_cast<int>(q[i].get_num().get_si());
    root_coords.push_back(c);
  }

  // Bruhat covers w -> w s_beta with length + 1, weighted by <omega_i, beta^vee>
  // (beta^vee = beta in the simply-laced normalisation).
  edges_.resize(elements_.size());
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    const int l = elements_[w].length();
    for (std::size_t b = 0; b < reflections.size(); ++b) {
      const WeylElement x = elements_[w] * reflections[b];
      if (x.length() == l + 1) edges_[w].push_back({index_of(x), root_coords[b]});
    }
  }

  // Express every eps_u as a rational polynomial in the divisor classes,
  // degree by degree.
  polynomial_.resize(elements_.size());
  const int max_len = elements_.back().length();
  std::vector<std::pair<Monomial, RatVector>> layer;
  {
    RatVector one(elements_.size());
    one[index_of(WeylElement())] = 1;
    layer.push_back({{}, one});
    polynomial_[index_of(WeylElement())] = {Term{{}, 1}};
  }
  for (int deg = 1; deg <= max_len; ++deg) {
    std::vector<std::pair<Monomial, RatVector>> next;
    for (const auto& [mono, vec] : layer) {
      const int last = mono.empty() ? 1 : mono.back();
      for (int i = last; i <= 4; ++i) {
        Monomial m = mono;
        m.push_back(i);
        next.push_back({m, chevalley(i, vec)});
      }
    }
    layer = std::move(next);

    std::vector<std::size_t> cells;
    for (std::size_t u = 0; u < elements_.size(); ++u)
      if (elements_[u].length() == deg) cells.push_back(u);

    std::vector<IntVector> rows;
    for (const auto& [mono, vec] : layer) {
      IntVector r;
      for (std::size_t u : cells) {
        ensure(vec[u].get_den() == 1, "Chevalley chain produced a fraction");
        r.push_back(vec[u].get_num());
      }
      rows.push_back(std::move(r));
    }
    const auto chosen = independent_subset(rows);
    if (chosen.size() != cells.size())
      fail(ErrorCode::kSingularSystem,
           "divisor monomials do not span H^" + std::to_string(2 * deg) + "(G/B; Q)");

    RatMatrix square(cells.size(), cells.size());
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (std::size_t c = 0; c < cells.size(); ++c) square(r, c) = rows[chosen[r]][c];
    const auto inv = inverse(square);
    ensure(inv.has_value(), "monomial basis matrix is singular");
    // eps_u = sum_r inv(u, r) * monomial_r, since rows of `square` expand monomials.
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::vector<Term> poly;
      for (std::size_t r = 0; r < chosen.size(); ++r) {
        const Rational& k = (*inv)(c, r);
        if (k != 0) poly.push_back({layer[chosen[r]].first, k});
      }
      polynomial_[cells[c]] = std::move(poly);
    }
  }
}

RatVector FlagCohomology::chevalley(int i, const RatVector& vec) const {
  check_node(i);
  RatVector out(elements_.size());
  for (std::size_t w = 0; w < vec.size(); ++w) {
    if (vec[w] == 0) continue;
    for (const Edge& e : edges_[w]) {
      const int k = e.weight[static_cast<std::size_t>(i - 1)];
      if (k != 0) out[e.target] += k * vec[w];
    }
  }
  return out;
}

RatVector FlagCohomology::product(std::size_t u, std::size_t v) const {
  RatVector total(elements_.size());
  for (const Term& t : polynomial_[u]) {
    RatVector vec(elements_.size());
    vec[v] = 1;
    for (int i : t.monomial) vec = chevalley(i, vec);
    for (std::size_t w = 0; w < vec.size(); ++w)
      if (vec[w] != 0) total[w] += t.coeff * vec[w];
  }
  return total;
}

// --- SchubertRing ----------------------------------------------------------

SchubertRing::SchubertRing(Parabolic p) : parabolic_(p), reps_(min_coset_reps(p)), index_by_code_(384, -1) {
  const std::size_t n = reps_.size();
  for (std::size_t i = 0; i < n; ++i) {
    index_by_code_[reps_[i].code()] = static_cast<int>(i);
    const SchubertClass c(p, reps_[i]);
    degrees_.push_back(c.degree());
    lambdas_.push_back(c.lambda());
    levels_.push_back(c.level());
  }
  identity_ = index_of(WeylElement());
  top_ = index_of(longest_coset_rep(p));

  const WeylElement wo = longest_element();
  const WeylElement wop = longest_levi(p);
  for (std::size_t i = 0; i < n; ++i) {
    const WeylElement dual = wo * reps_[i] * wop;
    ensure(is_min_coset_rep(dual, p), "theta^P does not preserve W^P");
    dual_.push_back(index_of(dual));
  }

  const FlagCohomology& flag = FlagCohomology::instance();
  cup_.reserve(n * n);
  odot_.reserve(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const RatVector prod = flag.product(flag.index_of(reps_[u]), flag.index_of(reps_[v]));
      std::vector<Integer> coeffs(n);
      for (std::size_t w = 0; w < prod.size(); ++w) {
        if (prod[w] == 0) continue;
        const WeylElement& x = flag.elements()[w];
        ensure(is_min_coset_rep(x, p), "product left the image of H*(G/P) in H*(G/B)");
        ensure(prod[w].get_den() == 1, "non-integral Schubert structure constant");
        ensure(prod[w] > 0, "negative Schubert structure constant");
        coeffs[index_of(x)] = prod[w].get_num();
      }
      CohomologyElement c(p, coeffs);
      std::vector<Integer> kept(n);
      for (std::size_t w = 0; w < n; ++w) {
        if (coeffs[w] == 0) continue;
        const bool by_rho = odot_keeps_by_rho(u, v, w);
        ensure(by_rho == odot_keeps_by_level(u, v, w), "odot_0 filters disagree");
        if (by_rho) kept[w] = coeffs[w];
      }
      cup_.push_back(std::move(c));
      odot_.emplace_back(p, std::move(kept));
    }
  }
}

std::size_t SchubertRing::index_of(const WeylElement& w) const {
  const int idx = index_by_code_[w.code()];
  if (idx < 0)
    fail(ErrorCode::kNotInCosetReps,
         w.word_string() + " is not in W^P for P" + std::to_string(parabolic_.node()));
  return static_cast<std::size_t>(idx);
}

std::vector<std::size_t> SchubertRing::betti() const {
  std::vector<std::size_t> b(static_cast<std::size_t>(dimension()) + 1);
  for (int d : degrees_) ++b[static_cast<std::size_t>(d)];
  return b;
}

bool SchubertRing::odot_keeps_by_rho(std::size_t u, std::size_t v, std::size_t w) const {
  const Weight r = rho();
  const Weight sum = reps_[u].inverse().apply(r) + reps_[v].inverse().apply(r) -
                     reps_[w].inverse().apply(r) - r;
  return pair(sum, parabolic_.coweight()) == 0;
}

bool SchubertRing::odot_keeps_by_level(std::size_t u, std::size_t v, std::size_t w) const {
  return levels_[u] + levels_[v] - levels_[w] == rho_level();
}

CohomologyElement SchubertRing::chevalley_multiply(const CohomologyElement& c) const {
  if (!(c.parabolic() == parabolic_)) fail(ErrorCode::kParabolicMismatch, "chevalley_multiply: parabolic mismatch");
  (void)c.degree();  // homogeneity check
  const Weight omega = parabolic_.omega();
  CohomologyElement out(parabolic_);
  std::vector<Integer> coeffs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (c[i] == 0) continue;
    const int l = degrees_[i];
    for (const auto& beta : positive_roots()) {
      const WeylElement x = reps_[i] * WeylElement::reflection(beta);
      if (x.length() != l + 1 || !is_min_coset_rep(x, parabolic_)) continue;
      const Rational k = inner(omega, beta);
      coeffs[index_of(x)] += k.get_num() * c[i];
    }
  }
  return CohomologyElement(parabolic_, coeffs);
}

CohomologyElement SchubertRing::multiply(Product kind, const CohomologyElement& a, const CohomologyElement& b) const {
  if (!(a.parabolic() == parabolic_) || !(b.parabolic() == parabolic_))
    fail(ErrorCode::kParabolicMismatch, "multiply: parabolic mismatch");
  CohomologyElement out(parabolic_);
  for (std::size_t u = 0; u < size(); ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < size(); ++v) {
      if (b[v] == 0) continue;
      out += Integer(a[u] * b[v]) * product(kind, u, v);
    }
  }
  return out;
}

Integer SchubertRing::structure_constant_by_pairing(std::size_t u, std::size_t v, std::size_t w) const {
  const CohomologyElement uv = cup(u, v);
  const CohomologyElement triple = multiply(Product::kCup, uv, CohomologyElement::basis(parabolic_, dual_[w]));
  return triple[top_];
}

std::vector<std::string> SchubertRing::canonical_labels() const {
  const auto b = betti();
  std::vector<std::string> labels;
  std::vector<int> seen(b.size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    const auto d = static_cast<std::size_t>(degrees_[i]);
    std::string s = "b_" + std::to_string(d);
    ++seen[d];
    if (b[d] > 1) s += "^" + std::to_string(seen[d]);
    labels.push_back(s);
  }
  return labels;
}

const SchubertRing& schubert_ring(Parabolic p) {
  static std::once_flag flags[4];
  static std::unique_ptr<SchubertRing> rings[4];
  const auto k = static_cast<std::size_t>(p.node() - 1);
  std::call_once(flags[k], [&] { rings[k] = std::make_unique<SchubertRing>(p); });
  return *rings[k];
}

CohomologyElement chevalley_multiply(const CohomologyElement& c, Parabolic p) {
  return schubert_ring(p).chevalley_multiply(c);
}

namespace {
const SchubertRing& common_ring(const SchubertClass& u, const SchubertClass& v) {
  if (!(u.parabolic() == v.parabolic())) fail(ErrorCode::kParabolicMismatch, "classes live on different G/P");
  return schubert_ring(u.parabolic());
}
}  // namespace

CohomologyElement cup_product(const SchubertClass& u, const SchubertClass& v) {
  const auto& ring = common_ring(u, v);
  return ring.cup(ring.index_of(u.rep()), ring.index_of(v.rep()));
}

CohomologyElement odot_product(const SchubertClass& u, const SchubertClass& v) {
  const auto& ring = common_ring(u, v);
  return ring.odot(ring.index_of(u.rep()), ring.index_of(v.rep()));
}

SchubertClass poincare_dual(const SchubertClass& u) {
  const auto& ring = schubert_ring(u.parabolic());
  return ring.schubert_class(ring.poincare_dual(ring.index_of(u.rep())));
}

}  // namespace d4
