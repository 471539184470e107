#pragma once

// The D4 root datum in Bourbaki's coordinates: weights and coweights in the
// orthonormal eps basis, the Weyl group as even signed permutations, the four
// maximal parabolics and the triality group of diagram automorphisms.

#include "d4/arith.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace d4 {

inline constexpr int kRank = 4;
inline constexpr std::size_t kWeylOrder = 192;
inline constexpr int kNumPositiveRoots = 12;

struct WeightTag {};
struct CoWeightTag {};

/// Four exact coordinates. Tagged so that weights (in a*) and coweights (in a)
/// cannot be mixed up by accident.
template <typename Tag>
class Vec4 {
 public:
  Vec4() = default;
  Vec4(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  explicit Vec4(std::array<Rational, 4> c) : c_(std::move(c)) {}

  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  Vec4 operator+(const Vec4& o) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = (*this)[i] + o[i];
    return r;
  }
  Vec4 operator-(const Vec4& o) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = (*this)[i] - o[i];
    return r;
  }
  Vec4 operator-() const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = -(*this)[i];
    return r;
  }
  Vec4& operator+=(const Vec4& o) { return *this = *this + o; }
  friend Vec4 operator*(const Rational& s, const Vec4& v) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = s * v[i];
    return r;
  }

  bool operator==(const Vec4& o) const { return c_ == o.c_; }
  bool operator<(const Vec4& o) const {
    for (int i = 0; i < 4; ++i) {
      int c = cmp((*this)[i], o[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
      if (i) s += ",";
      s += to_fraction_string(c_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }

 private:
  std::array<Rational, 4> c_{};
};

using Weight = Vec4<WeightTag>;
using CoWeight = Vec4<CoWeightTag>;

/// Natural pairing a* x a; eps and eps* are dual bases.
Rational pair(const Weight& lambda, const CoWeight& h);
/// Normalised invariant form on a* (roots have squared length 2).
Rational inner(const Weight& a, const Weight& b);

/// The identification eps_i <-> eps_i^* of a* with a.
CoWeight to_coweight(const Weight& w);
Weight to_weight(const CoWeight& h);

Weight simple_root(int i);
Weight fundamental_weight(int i);
Weight rho();
/// x_i with alpha_j(x_i) = delta_ij.
CoWeight fundamental_coweight(int i);
/// The 12 positive roots eps_i -+ eps_j (i < j).
const std::vector<Weight>& positive_roots();

/// Coefficients c_i with v = sum c_i alpha_i.
std::array<Rational, 4> simple_root_coords(const Weight& v);
/// Coefficients <v, alpha_i^vee>; integral exactly on the weight lattice.
std::array<Rational, 4> fundamental_coords(const Weight& v);
Weight from_fundamental_coords(std::span<const Rational> a);
Weight from_fundamental_coords(std::span<const int> a);

bool is_dominant(const Weight& v);
/// x >= y >= z >= |w|.
bool is_dominant(const CoWeight& h);
bool in_weight_lattice(const Weight& v);
bool in_root_lattice(const Weight& v);

void check_node(int i);

/// Even signed permutation: w(eps_i) = sign_i * eps_{perm_i} (0-based slots).
class WeylElement {
 public:
  WeylElement();

  static WeylElement from_signed_permutation(std::array<int, 4> perm, std::array<int, 4> signs);
  static WeylElement simple_reflection(int i);
  static WeylElement from_word(std::span<const int> word);
  /// Reflection in a root (any root, positive or negative).
  static WeylElement reflection(const Weight& root);

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;

  Weight apply(const Weight& v) const;
  CoWeight apply(const CoWeight& h) const;
  std::array<int, 4> apply_doubled(const std::array<int, 4>& v) const;

  /// Number of positive roots sent to negative roots.
  int length() const;
  /// (-1)^length.
  int sign() const { return (length() % 2) == 0 ? 1 : -1; }
  /// Lexicographically smallest reduced word (letters 1..4).
  std::vector<int> reduced_word() const;
  std::string word_string() const;

  bool is_identity() const { return *this == WeylElement(); }
  int perm(int slot) const { return perm_[static_cast<std::size_t>(slot)]; }
  int sign_at(int slot) const { return sign_[static_cast<std::size_t>(slot)]; }
  /// Dense code in [0, 384) used for hashing and table lookups.
  std::uint16_t code() const;

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

 private:
  std::array<std::int8_t, 4> perm_;
  std::array<std::int8_t, 4> sign_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.code(); }
};

/// All 192 elements, sorted by (length, reduced word).
const std::vector<WeylElement>& weyl_group();
bool canonical_less(const WeylElement& a, const WeylElement& b);

/// Longest element of the parabolic subgroup generated by the given nodes.
WeylElement longest_in(std::span<const int> nodes);
WeylElement longest_element();

/// Maximal parabolic P_i: W_P is generated by s_j, j != i.
class Parabolic {
 public:
  explicit Parabolic(int node);
  int node() const { return node_; }
  std::vector<int> levi_nodes() const;
  Weight omega() const { return fundamental_weight(node_); }
  CoWeight coweight() const { return fundamental_coweight(node_); }
  bool operator==(const Parabolic&) const = default;

 private:
  int node_;
};

/// Minimal length coset representatives of W/W_P in canonical order.
const std::vector<WeylElement>& min_coset_reps(Parabolic p);
bool is_min_coset_rep(const WeylElement& w, Parabolic p);
/// Longest element of W_P.
WeylElement longest_levi(Parabolic p);
/// Longest element of W^P, equal to w_o * w_{o,P}.
WeylElement longest_coset_rep(Parabolic p);

/// Diagram automorphism of D4: a permutation of {1,3,4}, node 2 fixed.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism();
  /// images of nodes 1, 3, 4 respectively.
  static DiagramAutomorphism from_images(int image_of_1, int image_of_3, int image_of_4);
  static DiagramAutomorphism transposition(int a, int b);

  int operator()(int node) const { return image_[static_cast<std::size_t>(node)]; }
  /// Composition: (g * h)(i) = g(h(i)).
  DiagramAutomorphism operator*(const DiagramAutomorphism& h) const;
  DiagramAutomorphism inverse() const;

  Weight apply(const Weight& v) const;
  CoWeight apply(const CoWeight& h) const;
  WeylElement apply(const WeylElement& w) const;
  Parabolic apply(Parabolic p) const { return Parabolic((*this)(p.node())); }

  bool is_identity() const { return *this == DiagramAutomorphism(); }
  std::string name() const;

  bool operator==(const DiagramAutomorphism&) const = default;
  auto operator<=>(const DiagramAutomorphism&) const = default;

 private:
  std::array<int, 5> image_;  // 1-based, image_[0] unused
};

/// The six elements of F, identity first.
const std::vector<DiagramAutomorphism>& diagram_automorphisms();

inline Weight apply_automorphism(const DiagramAutomorphism& g, const Weight& v) { return g.apply(v); }

}  // namespace d4
