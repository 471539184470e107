#include "d4/rootdata.hpp"

#include <algorithm>
#include <set>

namespace d4 {

namespace {

const std::array<std::array<int, 4>, 12>& positive_roots_int() {
  static const auto roots = [] {
    std::array<std::array<int, 4>, 12> r{};
    std::size_t k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::array<int, 4> minus{}, plus{};
        minus[static_cast<std::size_t>(i)] = 1;
        minus[static_cast<std::size_t>(j)] = -1;
        plus[static_cast<std::size_t>(i)] = 1;
        plus[static_cast<std::size_t>(j)] = 1;
        r[k++] = minus;
        r[k++] = plus;
      }
    return r;
  }();
  return roots;
}

bool is_positive(const std::array<int, 4>& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

void check_node(int i) {
  if (i < 1 || i > kRank) fail(ErrorCode::kOutOfRange, "node index out of range: " + std::to_string(i));
}

Rational pair(const Weight& lambda, const CoWeight& h) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += lambda[i] * h[i];
  return s;
}

Rational inner(const Weight& a, const Weight& b) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

CoWeight to_coweight(const Weight& w) { return CoWeight(w.coords()); }
Weight to_weight(const CoWeight& h) { return Weight(h.coords()); }

Weight simple_root(int i) {
  check_node(i);
  switch (i) {
    case 1: return Weight(1, -1, 0, 0);
    case 2: return Weight(0, 1, -1, 0);
    case 3: return Weight(0, 0, 1, -1);
    default: return Weight(0, 0, 1, 1);
  }
}

Weight fundamental_weight(int i) {
  check_node(i);
  const Rational h(1, 2);
  switch (i) {
    case 1: return Weight(1, 0, 0, 0);
    case 2: return Weight(1, 1, 0, 0);
    case 3: return Weight(h, h, h, -h);
    default: return Weight(h, h, h, h);
  }
}

Weight rho() { return Weight(3, 2, 1, 0); }

CoWeight fundamental_coweight(int i) { return to_coweight(fundamental_weight(i)); }

const std::vector<Weight>& positive_roots() {
  static const std::vector<Weight> roots = [] {
    std::vector<Weight> r;
    for (const auto& b : positive_roots_int()) r.emplace_back(b[0], b[1], b[2], b[3]);
    return r;
  }();
  return roots;
}

std::array<Rational, 4> simple_root_coords(const Weight& v) {
  const Rational s3 = v[0] + v[1] + v[2];
  return {v[0], v[0] + v[1], (s3 - v[3]) / 2, (s3 + v[3]) / 2};
}

std::array<Rational, 4> fundamental_coords(const Weight& v) {
  return {v[0] - v[1], v[1] - v[2], v[2] - v[3], v[2] + v[3]};
}

Weight from_fundamental_coords(std::span<const Rational> a) {
  ensure(a.size() == 4, "from_fundamental_coords: need 4 coordinates");
  Weight w;
  for (int i = 0; i < 4; ++i) w += a[static_cast<std::size_t>(i)] * fundamental_weight(i + 1);
  return w;
}

Weight from_fundamental_coords(std::span<const int> a) {
  ensure(a.size() == 4, "from_fundamental_coords: need 4 coordinates");
  std::array<Rational, 4> q{a[0], a[1], a[2], a[3]};
  return from_fundamental_coords(std::span<const Rational>(q));
}

bool is_dominant(const Weight& v) {
  for (const auto& a : fundamental_coords(v))
    if (a < 0) return false;
  return true;
}

bool is_dominant(const CoWeight& h) { return is_dominant(to_weight(h)); }

bool in_weight_lattice(const Weight& v) {
  for (const auto& a : fundamental_coords(v))
    if (a.get_den() != 1) return false;
  return true;
}

bool in_root_lattice(const Weight& v) {
  for (const auto& c : simple_root_coords(v))
    if (c.get_den() != 1) return false;
  return true;
}

// --- WeylElement -----------------------------------------------------------

WeylElement::WeylElement() : perm_{0, 1, 2, 3}, sign_{1, 1, 1, 1} {}

WeylElement WeylElement::from_signed_permutation(std::array<int, 4> perm, std::array<int, 4> signs) {
  std::array<bool, 4> seen{};
  int neg = 0;
  WeylElement w;
  for (std::size_t i = 0; i < 4; ++i) {
    if (perm[i] < 0 || perm[i] > 3 || seen[static_cast<std::size_t>(perm[i])])
      fail(ErrorCode::kInvalidArgument, "not a permutation of four slots");
    seen[static_cast<std::size_t>(perm[i])] = true;
    if (signs[i] != 1 && signs[i] != -1) fail(ErrorCode::kInvalidArgument, "signs must be +-1");
    if (signs[i] < 0) ++neg;
    w.perm_[i] = static_cast<std::int8_t>(perm[i]);
    w.sign_[i] = static_cast<std::int8_t>(signs[i]);
  }
  if (neg % 2 != 0) fail(ErrorCode::kInvalidArgument, "type D requires an even number of sign changes");
  return w;
}

WeylElement WeylElement::simple_reflection(int i) {
  check_node(i);
  switch (i) {
    case 1: return from_signed_permutation({1, 0, 2, 3}, {1, 1, 1, 1});
    case 2: return from_signed_permutation({0, 2, 1, 3}, {1, 1, 1, 1});
    case 3: return from_signed_permutation({0, 1, 3, 2}, {1, 1, 1, 1});
    default: return from_signed_permutation({0, 1, 3, 2}, {1, 1, -1, -1});
  }
}

WeylElement WeylElement::from_word(std::span<const int> word) {
  WeylElement w;
  for (int i : word) w = w * simple_reflection(i);
  return w;
}

WeylElement WeylElement::reflection(const Weight& root) {
  const Rational norm = inner(root, root);
  if (norm != 2) fail(ErrorCode::kInvalidArgument, "reflection: not a root " + root.str());
  std::array<int, 4> perm{}, signs{};
  for (int i = 0; i < 4; ++i) {
    Weight e;
    e[i] = 1;
    const Weight img = e - inner(e, root) * root;
    int slot = -1;
    for (int j = 0; j < 4; ++j) {
      if (img[j] == 0) continue;
      if (slot != -1 || (img[j] != 1 && img[j] != -1))
        fail(ErrorCode::kInvalidArgument, "reflection: not a signed permutation");
      slot = j;
    }
    perm[static_cast<std::size_t>(i)] = slot;
    signs[static_cast<std::size_t>(i)] = img[slot] > 0 ? 1 : -1;
  }
  return from_signed_permutation(perm, signs);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto mid = static_cast<std::size_t>(o.perm_[i]);
    r.perm_[i] = perm_[mid];
    r.sign_[i] = static_cast<std::int8_t>(o.sign_[i] * sign_[mid]);
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto p = static_cast<std::size_t>(perm_[i]);
    r.perm_[p] = static_cast<std::int8_t>(i);
    r.sign_[p] = sign_[i];
  }
  return r;
}

Weight WeylElement::apply(const Weight& v) const {
  Weight r;
  for (int i = 0; i < 4; ++i) r[perm(i)] = sign_at(i) * v[i];
  return r;
}

CoWeight WeylElement::apply(const CoWeight& h) const { return to_coweight(apply(to_weight(h))); }

std::array<int, 4> WeylElement::apply_doubled(const std::array<int, 4>& v) const {
  std::array<int, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) r[static_cast<std::size_t>(perm_[i])] = sign_[i] * v[i];
  return r;
}

int WeylElement::length() const {
  int l = 0;
  for (const auto& b : positive_roots_int())
    if (!is_positive(apply_doubled(b))) ++l;
  return l;
}

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> word;
  WeylElement w = *this;
  int l = w.length();
  while (l > 0) {
    for (int i = 1; i <= 4; ++i) {
      WeylElement shorter = simple_reflection(i) * w;
      if (shorter.length() < l) {
        word.push_back(i);
        w = shorter;
        --l;
        break;
      }
    }
  }
  return word;
}

std::string WeylElement::word_string() const {
  const auto word = reduced_word();
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

std::uint16_t WeylElement::code() const {
  // Lehmer rank of the permutation (0..23), then the sign pattern.
  int p = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    int smaller = 0;
    for (std::size_t j = i + 1; j < 4; ++j) smaller += perm_[j] < perm_[i];
    p = p * static_cast<int>(4 - i) + smaller;
  }
  int s = 0;
  for (std::size_t i = 0; i < 4; ++i) s = s * 2 + (sign_[i] < 0 ? 1 : 0);
  return static_cast<std::uint16_t>(p * 16 + s);
}

bool canonical_less(const WeylElement& a, const WeylElement& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.reduced_word() < b.reduced_word();
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::set<WeylElement> seen{WeylElement()};
    std::vector<WeylElement> frontier{WeylElement()};
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const auto& w : frontier)
        for (int i = 1; i <= 4; ++i) {
          WeylElement x = w * WeylElement::simple_reflection(i);
          if (seen.insert(x).second) next.push_back(x);
        }
      frontier = std::move(next);
    }
    std::vector<WeylElement> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end(), canonical_less);
    ensure(all.size() == kWeylOrder, "Weyl group closure does not have order 192");
    return all;
  }();
  return group;
}

WeylElement longest_in(std::span<const int> nodes) {
  for (int n : nodes) check_node(n);
  WeylElement best;
  for (const auto& w : weyl_group()) {
    const auto word = w.reduced_word();
    const bool inside = std::all_of(word.begin(), word.end(), [&](int letter) {
      return std::find(nodes.begin(), nodes.end(), letter) != nodes.end();
    });
    if (inside && w.length() > best.length()) best = w;
  }
  return best;
}

WeylElement longest_element() {
  static const WeylElement wo = [] {
    const std::array<int, 4> all{1, 2, 3, 4};
    return longest_in(all);
  }();
  return wo;
}

// --- Parabolic -------------------------------------------------------------

Parabolic::Parabolic(int node) : node_(node) { check_node(node); }

std::vector<int> Parabolic::levi_nodes() const {
  std::vector<int> nodes;
  for (int j = 1; j <= 4; ++j)
    if (j != node_) nodes.push_back(j);
  return nodes;
}

bool is_min_coset_rep(const WeylElement& w, Parabolic p) {
  const int l = w.length();
  for (int j : p.levi_nodes())
    if ((w * WeylElement::simple_reflection(j)).length() < l) return false;
  return true;
}

const std::vector<WeylElement>& min_coset_reps(Parabolic p) {
  static const std::array<std::vector<WeylElement>, 4> reps = [] {
    std::array<std::vector<WeylElement>, 4> all;
    for (int i = 1; i <= 4; ++i) {
      for (const auto& w : weyl_group())
        if (is_min_coset_rep(w, Parabolic(i))) all[static_cast<std::size_t>(i - 1)].push_back(w);
    }
    return all;
  }();
  return reps[static_cast<std::size_t>(p.node() - 1)];
}

WeylElement longest_levi(Parabolic p) {
  const auto nodes = p.levi_nodes();
  return longest_in(nodes);
}

WeylElement longest_coset_rep(Parabolic p) { return longest_element() * longest_levi(p); }

// --- DiagramAutomorphism ---------------------------------------------------

DiagramAutomorphism::DiagramAutomorphism() : image_{0, 1, 2, 3, 4} {}

DiagramAutomorphism DiagramAutomorphism::from_images(int image_of_1, int image_of_3, int image_of_4) {
  std::set<int> images{image_of_1, image_of_3, image_of_4};
  if (images != std::set<int>{1, 3, 4})
    fail(ErrorCode::kInvalidArgument, "diagram automorphism must permute {1,3,4}");
  DiagramAutomorphism g;
  g.image_ = {0, image_of_1, 2, image_of_3, image_of_4};
  return g;
}

DiagramAutomorphism DiagramAutomorphism::transposition(int a, int b) {
  std::array<int, 5> img{0, 1, 2, 3, 4};
  check_node(a);
  check_node(b);
  if (a == 2 || b == 2 || a == b) fail(ErrorCode::kInvalidArgument, "transposition must swap two of {1,3,4}");
  std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
  return from_images(img[1], img[3], img[4]);
}

DiagramAutomorphism DiagramAutomorphism::operator*(const DiagramAutomorphism& h) const {
  DiagramAutomorphism r;
  for (int i = 1; i <= 4; ++i) r.image_[static_cast<std::size_t>(i)] = (*this)(h(i));
  return r;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism r;
  for (int i = 1; i <= 4; ++i) r.image_[static_cast<std::size_t>((*this)(i))] = i;
  return r;
}

Weight DiagramAutomorphism::apply(const Weight& v) const {
  const auto c = simple_root_coords(v);
  Weight out;
  for (int i = 1; i <= 4; ++i) out += c[static_cast<std::size_t>(i - 1)] * simple_root((*this)(i));
  return out;
}

CoWeight DiagramAutomorphism::apply(const CoWeight& h) const { return to_coweight(apply(to_weight(h))); }

WeylElement DiagramAutomorphism::apply(const WeylElement& w) const {
  auto word = w.reduced_word();
  for (int& letter : word) letter = (*this)(letter);
  return WeylElement::from_word(word);
}

std::string DiagramAutomorphism::name() const {
  if (is_identity()) return "id";
  const int a = (*this)(1), b = (*this)(3), c = (*this)(4);
  if (a == 1) return "(3 4)";
  if (b == 3) return "(1 4)";
  if (c == 4) return "(1 3)";
  // 3-cycles
  return a == 3 ? "(1 3 4)" : "(1 4 3)";
}

const std::vector<DiagramAutomorphism>& diagram_automorphisms() {
  static const std::vector<DiagramAutomorphism> group = {
      DiagramAutomorphism(),
      DiagramAutomorphism::transposition(1, 3),
      DiagramAutomorphism::transposition(1, 4),
      DiagramAutomorphism::transposition(3, 4),
      DiagramAutomorphism::from_images(3, 4, 1),
      DiagramAutomorphism::from_images(4, 1, 3),
  };
  return group;
}

}  // namespace d4
