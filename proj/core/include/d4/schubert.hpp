#pragma once

// Schubert calculus on the generalized Grassmannians G/P_i of D4: the
// Chevalley formula, the integral cup product and the degenerate product
// odot_0, all in the Schubert basis indexed by minimal coset representatives.

#include "d4/arith.hpp"
#include "d4/rootdata.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace d4 {

/// A Schubert class eps^P_w, w in W^P.
class SchubertClass {
 public:
  SchubertClass(Parabolic p, WeylElement rep);

  Parabolic parabolic() const { return parabolic_; }
  const WeylElement& rep() const { return rep_; }
  int degree() const { return rep_.length(); }
  /// Maximally singular weight w(omega_P).
  Weight lambda() const { return rep_.apply(parabolic_.omega()); }
  /// n_w = (w^{-1} rho)(x_P).
  Rational level() const { return pair(rep_.inverse().apply(rho()), parabolic_.coweight()); }

  bool operator==(const SchubertClass& o) const { return parabolic_ == o.parabolic_ && rep_ == o.rep_; }

 private:
  Parabolic parabolic_;
  WeylElement rep_;
};

/// Integral linear combination of Schubert classes of one G/P, stored densely
/// in the canonical order of W^P.
class CohomologyElement {
 public:
  explicit CohomologyElement(Parabolic p);
  CohomologyElement(Parabolic p, std::vector<Integer> coeffs);
  static CohomologyElement basis(Parabolic p, std::size_t index);
  static CohomologyElement of(const SchubertClass& c);

  Parabolic parabolic() const { return parabolic_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer coefficient(const WeylElement& w) const;

  bool is_zero() const;
  /// Common degree of all terms; -1 for zero, throws when inhomogeneous.
  int degree() const;

  CohomologyElement operator+(const CohomologyElement& o) const;
  CohomologyElement& operator+=(const CohomologyElement& o);
  friend CohomologyElement operator*(const Integer& k, const CohomologyElement& c);
  bool operator==(const CohomologyElement& o) const;

  /// e.g. "b_3^1 + 2b_4" given per-class labels.
  std::string format(const std::vector<std::string>& labels) const;

 private:
  Parabolic parabolic_;
  std::vector<Integer> coeffs_;
};

enum class Product { kCup, kOdot };

/// H^*(G/P) with both products tabulated once at construction.
class SchubertRing {
 public:
  explicit SchubertRing(Parabolic p);

  Parabolic parabolic() const { return parabolic_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<WeylElement>& reps() const { return reps_; }
  std::size_t index_of(const WeylElement& w) const;
  SchubertClass schubert_class(std::size_t i) const { return {parabolic_, reps_[i]}; }

  int degree(std::size_t i) const { return degrees_[i]; }
  const Weight& lambda(std::size_t i) const { return lambdas_[i]; }
  const Rational& level(std::size_t i) const { return levels_[i]; }
  /// rho(x_P), the level of the identity class.
  const Rational& rho_level() const { return levels_[identity_]; }

  std::size_t identity() const { return identity_; }
  std::size_t top() const { return top_; }
  int dimension() const { return degrees_[top_]; }
  /// Ranks of H^{2k}, k = 0..dimension.
  std::vector<std::size_t> betti() const;

  std::size_t poincare_dual(std::size_t i) const { return dual_[i]; }

  /// Multiplication by the degree-2 generator eps_{s_{i_P}}.
  CohomologyElement chevalley_multiply(const CohomologyElement& c) const;

  const CohomologyElement& cup(std::size_t u, std::size_t v) const { return cup_[u * size() + v]; }
  const CohomologyElement& odot(std::size_t u, std::size_t v) const { return odot_[u * size() + v]; }
  const CohomologyElement& product(Product kind, std::size_t u, std::size_t v) const {
    return kind == Product::kCup ? cup(u, v) : odot(u, v);
  }
  CohomologyElement multiply(Product kind, const CohomologyElement& a, const CohomologyElement& b) const;

  /// The odot_0 level condition on a term eps_w of eps_u * eps_v, evaluated
  /// both from the rho-pairing definition and from the tabulated levels.
  bool odot_keeps_by_rho(std::size_t u, std::size_t v, std::size_t w) const;
  bool odot_keeps_by_level(std::size_t u, std::size_t v, std::size_t w) const;

  /// d^w_{u,v} recomputed as the top coefficient of eps_u eps_v eps_{theta w}.
  Integer structure_constant_by_pairing(std::size_t u, std::size_t v, std::size_t w) const;

  /// Default labels b_k^j, numbered within a degree in canonical order.
  std::vector<std::string> canonical_labels() const;

 private:
  Parabolic parabolic_;
  std::vector<WeylElement> reps_;
  std::vector<int> degrees_;
  std::vector<Weight> lambdas_;
  std::vector<Rational> levels_;
  std::vector<std::size_t> dual_;
  std::vector<int> index_by_code_;
  std::size_t identity_ = 0;
  std::size_t top_ = 0;
  std::vector<CohomologyElement> cup_;
  std::vector<CohomologyElement> odot_;
};

/// Shared immutable rings, built on first use.
const SchubertRing& schubert_ring(Parabolic p);

CohomologyElement chevalley_multiply(const CohomologyElement& c, Parabolic p);
CohomologyElement cup_product(const SchubertClass& u, const SchubertClass& v);
CohomologyElement odot_product(const SchubertClass& u, const SchubertClass& v);
SchubertClass poincare_dual(const SchubertClass& u);

/// H^*(G/B; Q) through the Chevalley operators of the four divisor classes.
/// Products of Schubert classes are obtained by writing eps_u as a polynomial
/// in the divisor classes (exact linear solve per degree) and applying the
/// corresponding operator chain to eps_v.
class FlagCohomology {
 public:
  static const FlagCohomology& instance();

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t index_of(const WeylElement& w) const;

  /// eps_{s_i} * vec.
  RatVector chevalley(int i, const RatVector& vec) const;
  RatVector product(std::size_t u, std::size_t v) const;

 private:
  FlagCohomology();

  using Monomial = std::vector<int>;
  struct Term {
    Monomial monomial;
    Rational coeff;
  };
  struct Edge {
    std::size_t target;
    std::array<int, 4> weight;  // <omega_i, beta^vee>, i = 1..4
  };

  std::vector<WeylElement> elements_;
  std::vector<int> index_by_code_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<Term>> polynomial_;
};

}  // namespace d4
