#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace d4::oracle {

namespace {

// Bareiss determinant of a small square integer matrix.
Integer det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool in_cone(const std::vector<IntVector>& functionals, const IntVector& x) {
  return std::all_of(functionals.begin(), functionals.end(), [&](const IntVector& f) { return dot(f, x) >= 0; });
}

IntVector make_primitive(IntVector v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

}  // namespace

std::vector<IntVector> brute_force_rays(const std::vector<IntVector>& functionals, std::size_t dim) {
  std::set<IntVector> rays;
  const std::size_t m = functionals.size();
  const std::size_t k = dim - 1;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > m) return {};
  while (true) {
    IntVector v(dim);
    for (std::size_t col = 0; col < dim; ++col) {
      std::vector<std::vector<Integer>> minor;
      for (std::size_t r : pick) {
        std::vector<Integer> row;
        for (std::size_t c = 0; c < dim; ++c)
          if (c != col) row.push_back(functionals[r][c]);
        minor.push_back(row);
      }
      v[col] = (col % 2 == 0 ? 1 : -1) * det(minor);
    }
    if (std::any_of(v.begin(), v.end(), [](const Integer& c) { return c != 0; })) {
      v = make_primitive(v);
      if (in_cone(functionals, v)) rays.insert(v);
      IntVector w = v;
      for (auto& c : w) c = -c;
      if (in_cone(functionals, w)) rays.insert(w);
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {rays.begin(), rays.end()};
}

std::vector<IntVector> brute_force_hilbert_basis(const std::vector<IntVector>& functionals, std::size_t dim, long radius,
                                                 long search_radius) {
  std::vector<IntVector> points;
  IntVector x(dim, Integer(-search_radius));
  while (true) {
    if (in_cone(functionals, x) && std::any_of(x.begin(), x.end(), [](const Integer& c) { return c != 0; }))
      points.push_back(x);
    std::size_t i = 0;
    while (i < dim && x[i] == search_radius) x[i++] = -search_radius;
    if (i == dim) break;
    x[i] += 1;
  }
  std::vector<IntVector> basis;
  for (const auto& p : points) {
    if (std::any_of(p.begin(), p.end(), [&](const Integer& c) { return abs(c) > radius; })) continue;
    bool reducible = false;
    for (const auto& q : points) {
      if (q == p) continue;
      IntVector r(dim);
      for (std::size_t i = 0; i < dim; ++i) r[i] = p[i] - q[i];
      if (in_cone(functionals, r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Doubled SignedPerm::apply(const Doubled& x) const {
  Doubled y{};
  for (int i = 0; i < 4; ++i) y[perm[i]] = sign[i] * x[i];
  return y;
}

const std::vector<SignedPerm>& weyl_group() {
  static const std::vector<SignedPerm> group = [] {
    std::vector<SignedPerm> g;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (p[i] > p[j]) ++inversions;
      for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
        SignedPerm s{p, {}, inversions % 2 ? -1 : 1};
        for (int i = 0; i < 4; ++i) s.sign[i] = (mask >> i) & 1 ? -1 : 1;
        g.push_back(s);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return g;
  }();
  return group;
}

Doubled doubled(const Fundamental& a) {
  return {2 * a[0] + 2 * a[1] + a[2] + a[3], 2 * a[1] + a[2] + a[3], a[2] + a[3], a[3] - a[2]};
}

namespace {

using RootCoords = std::array<int, 4>;

// positive roots in simple-root coordinates
const std::array<RootCoords, 12> kPositive = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                               {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0},
                                               {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 1, 1}}};

bool to_root_coords(const Doubled& x, RootCoords& c) {
  const int s = x[0] + x[1] + x[2];
  if (x[0] % 2 || (x[0] + x[1]) % 2 || (s - x[3]) % 4 || (s + x[3]) % 4) return false;
  c = {x[0] / 2, (x[0] + x[1]) / 2, (s - x[3]) / 4, (s + x[3]) / 4};
  return true;
}

struct KeyHash {
  std::size_t operator()(const std::array<int, 5>& k) const {
    std::size_t h = 0;
    for (int v : k) h = h * 131 + static_cast<std::size_t>(v + 64);
    return h;
  }
};

std::int64_t partition(const RootCoords& c, int from) {
  static std::unordered_map<std::array<int, 5>, std::int64_t, KeyHash> memo;
  for (int v : c)
    if (v < 0) return 0;
  if (from == 12) return c == RootCoords{0, 0, 0, 0} ? 1 : 0;
  const std::array<int, 5> key{c[0], c[1], c[2], c[3], from};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  RootCoords r = c;
  while (std::all_of(r.begin(), r.end(), [](int v) { return v >= 0; })) {
    total += partition(r, from + 1);
    for (int i = 0; i < 4; ++i) r[i] -= kPositive[static_cast<std::size_t>(from)][static_cast<std::size_t>(i)];
  }
  memo.emplace(key, total);
  return total;
}

bool dominant(const Doubled& x) { return x[0] >= x[1] && x[1] >= x[2] && x[2] >= std::abs(x[3]); }

Doubled add(const Doubled& a, const Doubled& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
Doubled sub(const Doubled& a, const Doubled& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

const Doubled kRho2{6, 4, 2, 0};

}  // namespace

std::int64_t kostant_partition(const Doubled& x) {
  RootCoords c;
  if (!to_root_coords(x, c)) return 0;
  return partition(c, 0);
}

std::map<Doubled, std::int64_t> kostant_dominant(const Fundamental& a) {
  const Doubled lambda = doubled(a);
  // Floor of the (rational) simple-root coordinates of lambda bounds the
  // subtracted multiples; dominant weights lie in the positive root cone.
  const int s = lambda[0] + lambda[1] + lambda[2];
  const RootCoords top = {lambda[0] / 2, (lambda[0] + lambda[1]) / 2, (s - lambda[3]) / 4, (s + lambda[3]) / 4};
  // Doubled simple roots.
  const std::array<Doubled, 4> alpha = {{{2, -2, 0, 0}, {0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 2, 2}}};
  std::map<Doubled, std::int64_t> out;
  for (int n0 = 0; n0 <= top[0]; ++n0)
    for (int n1 = 0; n1 <= top[1]; ++n1)
      for (int n2 = 0; n2 <= top[2]; ++n2)
        for (int n3 = 0; n3 <= top[3]; ++n3) {
          Doubled mu = lambda;
          const int n[4] = {n0, n1, n2, n3};
          for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) mu[k] -= n[i] * alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          if (!dominant(mu)) continue;
          std::int64_t m = 0;
          for (const auto& w : weyl_group()) m += w.det * kostant_partition(sub(w.apply(add(lambda, kRho2)), add(mu, kRho2)));
          if (m != 0) out[mu] = m;
        }
  return out;
}

std::map<Doubled, std::int64_t> kostant_character(const Fundamental& a) {
  std::map<Doubled, std::int64_t> out;
  for (const auto& [mu, m] : kostant_dominant(a))
    for (const auto& w : weyl_group()) out[w.apply(mu)] = m;
  return out;
}

const std::map<Doubled, std::int64_t>& CharacterProductOracle::character(const Fundamental& a) {
  auto it = chars_.find(a);
  if (it == chars_.end()) it = chars_.emplace(a, kostant_character(a)).first;
  return it->second;
}

std::int64_t CharacterProductOracle::invariant_dim(const Fundamental& a, const Fundamental& b, const Fundamental& c) {
  const auto& ca = character(a);
  const auto& cb = character(b);
  const auto& small = ca.size() <= cb.size() ? ca : cb;
  const auto& large = ca.size() <= cb.size() ? cb : ca;
  const Doubled target = add(doubled(c), kRho2);
  std::int64_t total = 0;
  for (const auto& w : weyl_group()) {
    const Doubled point = sub(target, w.apply(kRho2));
    std::int64_t coeff = 0;
    for (const auto& [beta, m] : small) {
      auto it = large.find(sub(point, beta));
      if (it != large.end()) coeff += m * it->second;
    }
    total += w.det * coeff;
  }
  return total;
}

std::array<Fundamental, 3> canonical_triple(const std::array<Fundamental, 3>& t) {
  std::array<Fundamental, 3> best = t;
  std::array<int, 3> slot{0, 1, 2};
  do {
    std::array<int, 3> outer{0, 2, 3};
    do {
      std::array<Fundamental, 3> img;
      for (std::size_t s = 0; s < 3; ++s) {
        const auto& src = t[static_cast<std::size_t>(slot[s])];
        img[s] = {src[static_cast<std::size_t>(outer[0])], src[1], src[static_cast<std::size_t>(outer[1])],
                  src[static_cast<std::size_t>(outer[2])]};
      }
      best = std::min(best, img);
    } while (std::next_permutation(outer.begin(), outer.end()));
  } while (std::next_permutation(slot.begin(), slot.end()));
  return best;
}

bool in_root_lattice(const std::array<Fundamental, 3>& t) {
  Doubled s{};
  for (const auto& a : t) s = add(s, doubled(a));
  RootCoords c;
  return to_root_coords(s, c);
}

}  // namespace d4::oracle
