#include "d4/reptensor.hpp"

#include "d4/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace d4 {

namespace {

using D4 = std::array<int, 4>;

constexpr D4 kRho2{6, 4, 2, 0};

const std::vector<D4>& positive_roots2() {
  static const std::vector<D4> roots = [] {
    std::vector<D4> r;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        D4 a{}, b{};
        a[static_cast<std::size_t>(i)] = 2;
        a[static_cast<std::size_t>(j)] = -2;
        b[static_cast<std::size_t>(i)] = 2;
        b[static_cast<std::size_t>(j)] = 2;
        r.push_back(a);
        r.push_back(b);
      }
    return r;
  }();
  return roots;
}

long dot2(const D4& a, const D4& b) {
  long s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

D4 add(const D4& a, const D4& b, int k = 1) {
  return {a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2], a[3] + k * b[3]};
}

}  // namespace

DominantWeight::DominantWeight(int a1, int a2, int a3, int a4) : a{a1, a2, a3, a4} {
  for (int x : a)
    if (x < 0) fail(ErrorCode::kInvalidArgument, "dominant weight needs non-negative coordinates");
}

DominantWeight DominantWeight::from_weight(const Weight& w) {
  DominantWeight d;
  const auto f = fundamental_coords(w);
  for (std::size_t i = 0; i < 4; ++i) {
    if (f[i].get_den() != 1) fail(ErrorCode::kNotInWeightLattice, w.str() + " is not integral");
    if (f[i] < 0) fail(ErrorCode::kInvalidArgument, w.str() + " is not dominant");
    d.a[i] = static_cast<int>(f[i].get_num().get_si());
  }
  return d;
}

Weight DominantWeight::weight() const { return from_fundamental_coords(std::span<const int>(a)); }

std::array<int, 4> DominantWeight::doubled() const {
  return {2 * a[0] + 2 * a[1] + a[2] + a[3], 2 * a[1] + a[2] + a[3], a[2] + a[3], a[3] - a[2]};
}

std::string DominantWeight::str() const {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (a[i] != 1) s += std::to_string(a[i]);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Integer weyl_dimension(const DominantWeight& lambda) {
  const D4 lr = add(lambda.doubled(), kRho2);
  Integer num = 1, den = 1;
  for (const auto& b : positive_roots2()) {
    num *= dot2(lr, b);
    den *= dot2(kRho2, b);
  }
  ensure(num % den == 0, "Weyl dimension is not integral");
  return num / den;
}

std::array<int, 4> dominant_conjugate(const std::array<int, 4>& v) {
  D4 r;
  int negatives = 0;
  bool has_zero = false;
  for (std::size_t i = 0; i < 4; ++i) {
    negatives += v[i] < 0;
    has_zero = has_zero || v[i] == 0;
    r[i] = std::abs(v[i]);
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  if (negatives % 2 == 1 && !has_zero) r[3] = -r[3];
  return r;
}

WeightMultiplicityTable::WeightMultiplicityTable(const DominantWeight& lambda) : lambda_(lambda) {
  const D4 top = lambda.doubled();
  // Simple-root coordinates of lambda bound the depth of dominant weights.
  const auto c = simple_root_coords(lambda.weight());
  std::array<int, 4> depth{};
  for (std::size_t i = 0; i < 4; ++i) depth[i] = static_cast<int>(mpz_class(c[i].get_num() / c[i].get_den()).get_si());

  std::vector<std::pair<int, D4>> order;  // (height, weight)
  const std::array<D4, 4> alpha2{D4{2, -2, 0, 0}, D4{0, 2, -2, 0}, D4{0, 0, 2, -2}, D4{0, 0, 2, 2}};
  for (int k1 = 0; k1 <= depth[0]; ++k1)
    for (int k2 = 0; k2 <= depth[1]; ++k2)
      for (int k3 = 0; k3 <= depth[2]; ++k3)
        for (int k4 = 0; k4 <= depth[3]; ++k4) {
          D4 mu = top;
          mu = add(mu, alpha2[0], -k1);
          mu = add(mu, alpha2[1], -k2);
          mu = add(mu, alpha2[2], -k3);
          mu = add(mu, alpha2[3], -k4);
          if (mu[0] >= mu[1] && mu[1] >= mu[2] && mu[2] >= std::abs(mu[3])) order.push_back({k1 + k2 + k3 + k4, mu});
        }
  std::sort(order.begin(), order.end());

  const D4 lr = add(top, kRho2);
  const long norm_top = dot2(lr, lr);
  for (const auto& [height, mu] : order) {
    if (height == 0) {
      dominant_[mu] = 1;
      continue;
    }
    const D4 mr = add(mu, kRho2);
    const long denom = norm_top - dot2(mr, mr);
    ensure(denom > 0, "Freudenthal denominator vanished");
    long sum = 0;
    for (const auto& beta : positive_roots2()) {
      for (int k = 1;; ++k) {
        const D4 x = add(mu, beta, k);
        const std::int64_t m = multiplicity(x);
        if (m == 0) break;
        sum += m * dot2(x, beta);
      }
    }
    // 2 * sum_(beta,k) m (mu + k beta, beta) / (|lambda+rho|^2 - |mu+rho|^2), in doubled units.
    ensure((2 * sum) % denom == 0, "Freudenthal quotient is not integral");
    dominant_[mu] = 2 * sum / denom;
  }
}

std::int64_t WeightMultiplicityTable::multiplicity(const std::array<int, 4>& doubled) const {
  auto it = dominant_.find(dominant_conjugate(doubled));
  return it == dominant_.end() ? 0 : it->second;
}

std::map<std::array<int, 4>, std::int64_t> WeightMultiplicityTable::all_weights() const {
  std::map<D4, std::int64_t> out;
  for (const auto& [mu, m] : dominant_)
    for (const auto& w : weyl_group()) out[w.apply_doubled(mu)] = m;
  return out;
}

Integer WeightMultiplicityTable::total() const {
  Integer t = 0;
  for (const auto& [mu, m] : all_weights()) t += m;
  return t;
}

std::shared_ptr<const WeightMultiplicityTable> weight_multiplicities(const DominantWeight& lambda) {
  static std::mutex mutex;
  static std::map<DominantWeight, std::shared_ptr<const WeightMultiplicityTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WeightMultiplicityTable>(lambda);
  std::lock_guard lock(mutex);
  return cache.emplace(lambda, table).first->second;
}

std::int64_t tensor_multiplicity(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu) {
  const auto table = weight_multiplicities(mu);
  const D4 nr = add(nu.doubled(), kRho2);
  const D4 lr = add(lambda.doubled(), kRho2);
  std::int64_t total = 0;
  for (const auto& w : weyl_group()) {
    const D4 x = add(w.apply_doubled(nr), lr, -1);
    const std::int64_t m = table->multiplicity(x);
    if (m != 0) total += w.sign() * m;
  }
  ensure(total >= 0, "negative tensor multiplicity");
  return total;
}

std::int64_t invariant_dim(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu) {
  // w_o = -1, so every V(nu) is self-dual and the invariant count is the
  // multiplicity of V(nu) in V(lambda) (x) V(mu). The weight table is taken
  // for the smallest factor.
  std::array<DominantWeight, 3> t{lambda, mu, nu};
  std::size_t small = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (weyl_dimension(t[i]) < weyl_dimension(t[small])) small = i;
  const DominantWeight& a = t[(small + 1) % 3];
  const DominantWeight& c = t[(small + 2) % 3];
  return tensor_multiplicity(a, t[small], c);
}

DominantTriple to_dominant_triple(const WeightTriple& t) {
  return {DominantWeight::from_weight(t[0]), DominantWeight::from_weight(t[1]), DominantWeight::from_weight(t[2])};
}

WeightTriple to_weight_triple(const DominantTriple& t) { return {t[0].weight(), t[1].weight(), t[2].weight()}; }

bool GeneratorReport::all_positive() const {
  return std::all_of(checks.begin(), checks.end(), [](const GeneratorCheck& c) { return c.invariant_dim > 0; });
}

GeneratorReport verify_generators(const std::vector<DominantTriple>& reps) {
  GeneratorReport r;
  for (const auto& t : reps) r.checks.push_back({t, invariant_dim(t[0], t[1], t[2])});
  return r;
}

std::size_t SaturationReport::in_cone_count() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const SampleOutcome& s) { return s.in_cone; }));
}

std::vector<SampleOutcome> SaturationReport::violations() const {
  std::vector<SampleOutcome> v;
  for (const auto& s : samples)
    if (!s.consistent()) v.push_back(s);
  return v;
}

SaturationReport saturation_sample(std::size_t count, int bound, std::uint64_t seed, const HRep& eps_cone) {
  SaturationReport report;
  report.seed = seed;
  report.bound = bound;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, bound);
  std::vector<DominantTriple> triples;
  while (triples.size() < count) {
    DominantTriple t;
    for (auto& w : t)
      for (auto& x : w.a) x = coord(rng);
    if (in_root_lattice(t[0].weight() + t[1].weight() + t[2].weight())) triples.push_back(t);
  }
  report.samples.resize(count);
  parallel_for(count, [&](std::size_t i) {
    const auto& t = triples[i];
    const RatVector p = flatten(to_weight_triple(t));
    report.samples[i] = {t, contains(eps_cone, std::span<const Rational>(p)), invariant_dim(t[0], t[1], t[2])};
  });
  return report;
}

}  // namespace d4
