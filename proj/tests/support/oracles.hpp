#pragma once

// Slow, independent reference computations used only by the tests.

#include "d4/arith.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace d4::oracle {

/// Extremal rays of a pointed cone {x : A x >= 0} in dimension <= 4 by trying
/// every (d-1)-subset of constraints. Primitive, sorted, duplicate free.
std::vector<IntVector> brute_force_rays(const std::vector<IntVector>& functionals, std::size_t dim);

/// Irreducible nonzero lattice points of {x : A x >= 0} with max-norm <= radius.
/// Decompositions are searched inside the box of max-norm search_radius.
std::vector<IntVector> brute_force_hilbert_basis(const std::vector<IntVector>& functionals, std::size_t dim, long radius,
                                                 long search_radius);

using Doubled = std::array<int, 4>;  ///< 2 * eps coordinates
using Fundamental = std::array<int, 4>;

/// Even signed permutations with their determinant.
struct SignedPerm {
  std::array<int, 4> perm;
  std::array<int, 4> sign;
  int det;
  Doubled apply(const Doubled& x) const;
};
const std::vector<SignedPerm>& weyl_group();

Doubled doubled(const Fundamental& a);

/// Number of ways to write a doubled weight as a sum of positive roots.
std::int64_t kostant_partition(const Doubled& x);

/// Dominant weight multiplicities of V(a) from Kostant's multiplicity formula.
std::map<Doubled, std::int64_t> kostant_dominant(const Fundamental& a);
/// All weights of V(a), Weyl orbits expanded.
std::map<Doubled, std::int64_t> kostant_character(const Fundamental& a);

/// dim (V(a) (x) V(b) (x) V(c))^G as the coefficient sum
///   sum_w det(w) [chi_a chi_b](c + rho - w rho)
/// over formal characters. Characters are cached.
class CharacterProductOracle {
 public:
  std::int64_t invariant_dim(const Fundamental& a, const Fundamental& b, const Fundamental& c);

 private:
  const std::map<Doubled, std::int64_t>& character(const Fundamental& a);
  std::map<Fundamental, std::map<Doubled, std::int64_t>> chars_;
};

/// Lexicographically smallest image of a triple under slot permutations and
/// the diagram automorphisms (permutations of a1, a3, a4).
std::array<Fundamental, 3> canonical_triple(const std::array<Fundamental, 3>& t);

/// The triple sums to an element of the root lattice.
bool in_root_lattice(const std::array<Fundamental, 3>& t);

}  // namespace d4::oracle
