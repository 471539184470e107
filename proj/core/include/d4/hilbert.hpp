#pragma once

// The semigroup of lattice points of the eigencone in the lattice of triples
// of weights whose sum lies in the root lattice, its Hilbert basis, and the
// reduction of that basis modulo S3 x F.

#include "d4/cone.hpp"
#include "d4/linalg.hpp"
#include "d4/rootdata.hpp"
#include "d4/triangles.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace d4 {

using WeightTriple = std::array<Weight, 3>;

/// The 12 generators alpha-bar_1..4, zeta_1..8 of the lattice.
const std::vector<WeightTriple>& lattice_basis();

/// 12 x 12 integer matrix whose columns are the basis triples in doubled eps
/// coordinates (eps coordinates of omega_3, omega_4 are half-integers).
const IntMatrix& lattice_basis_matrix();

/// Flattened eps coordinates (x1..w1, x2..w2, x3..w3).
RatVector flatten(const WeightTriple& t);
WeightTriple unflatten(std::span<const Rational> v);

/// Integer coordinates of t in the lattice basis. Throws kNotInWeightLattice or
/// kSumNotInRootLattice when t is outside the lattice.
IntVector to_coords(const WeightTriple& t);
WeightTriple from_coords(std::span<const Integer> coords);

/// Fundamental-weight coordinates (a1..a4 per slot).
IntVector fundamental_coords(const WeightTriple& t);
WeightTriple triple_from_fundamental(std::span<const Integer> a);
std::string triple_string(const WeightTriple& t);  ///< e.g. "(w1, w3, w4)"

struct LatticeTriple {
  WeightTriple weights;
  IntVector coords;
  static LatticeTriple from_weights(const WeightTriple& t);
  static LatticeTriple from_coords(std::span<const Integer> c);
};

/// The cone given by eps-coordinate functionals rewritten in lattice coordinates.
HRep to_lattice_coords(const HRep& eps_cone);

struct HilbertBasis {
  std::vector<IntVector> elements;  ///< sorted by (degree, lex)
  std::vector<IntVector> rays;      ///< primitive extremal ray generators
  std::size_t simplicial_cones = 0;
  Integer total_volume = 0;         ///< sum of |det| over the triangulation
  std::size_t candidates = 0;
  std::vector<std::size_t> non_ray_elements() const;
};

/// Hilbert basis of {x in Z^d : A x >= 0}; the cone must be pointed and
/// full-dimensional (kNotPointed otherwise).
HilbertBasis hilbert_basis(const HRep& h);
HilbertBasis hilbert_basis(const HRep& h, const VRep& v);

/// Simplicial cones (as ray index sets) of a pulling triangulation.
std::vector<std::vector<std::size_t>> pulling_triangulation(const HRep& h, const VRep& v);

/// Lattice points V q, q in [0,1)^d, of the parallelepiped spanned by the
/// columns of a nonsingular integer matrix.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& generators);

struct TripleOrbit {
  IntVector representative;          ///< lexmin fundamental coordinates
  std::vector<std::size_t> members;  ///< indices into the input list
  std::size_t size() const { return members.size(); }
};

/// Lexicographically minimal fundamental coordinates over the group orbit.
IntVector canonical_form(const WeightTriple& t, SymmetryGroup g);
std::vector<TripleOrbit> orbit_reduce(std::span<const WeightTriple> triples, SymmetryGroup g);

/// The eigencone of D4 and its Hilbert basis, computed once.
struct EigenconeData {
  HRep eps_cone;      ///< 306 functionals, eps coordinates
  VRep eps_rays;      ///< extremal rays, eps coordinates
  HRep lattice_cone;  ///< the same cone in lattice coordinates
  HilbertBasis basis;
  std::vector<WeightTriple> basis_triples;
  std::vector<TripleOrbit> orbits;
};
const EigenconeData& eigencone_data();

std::string hilbert_json(const EigenconeData& d);
/// Fundamental-coordinate triples of every element, as written by hilbert_json.
std::vector<WeightTriple> read_hilbert_json(const std::string& text);
std::string hilbert_markdown(const EigenconeData& d);

}  // namespace d4
