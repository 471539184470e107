#pragma once

// Triangle inequalities T^P_w on a^3 = Q^12 (coordinates x1,y1,z1,w1, ...,
// x3,y3,z3,w3), the 12 Weyl chamber inequalities, and their symmetry orbits.

#include "d4/arith.hpp"
#include "d4/rootdata.hpp"
#include "d4/schubert.hpp"

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace d4 {

inline constexpr std::size_t kTripleDim = 12;

using ClassTriple = std::array<std::size_t, 3>;

enum class InequalityKind { kWTI, kETI, kChamber };
std::string to_string(InequalityKind k);

struct ChamberSource {
  int factor;  ///< 0..2
  int index;   ///< 0: x-y, 1: y-z, 2: z-w, 3: z+w
};

struct TriangleSource {
  int parabolic;
  ClassTriple classes;  ///< indices into schubert_ring(P).reps()
};

class LinearInequality {
 public:
  LinearInequality(IntVector coefficients, std::variant<ChamberSource, TriangleSource> source,
                   InequalityKind kind);

  /// Primitive integer functional; the inequality reads <a, h> >= 0.
  const IntVector& coefficients() const { return coefficients_; }
  const std::variant<ChamberSource, TriangleSource>& source() const { return source_; }
  InequalityKind kind() const { return kind_; }
  int parabolic() const;  ///< 0 for chamber inequalities

  Rational evaluate(std::span<const Rational> point) const;
  bool holds_at(std::span<const Rational> point) const { return evaluate(point) >= 0; }

  /// e.g. "y1 + y2 - z3 >= 0".
  std::string str() const;

 private:
  IntVector coefficients_;
  std::variant<ChamberSource, TriangleSource> source_;
  InequalityKind kind_;
};

std::string format_functional(std::span<const Integer> coefficients);

/// Ordered triples with eps_{w1} odot eps_{w2} odot eps_{w3} = eps_{w_o^P}.
std::vector<ClassTriple> enumerate_deepest_triples(Parabolic p);
LinearInequality inequality_of(Parabolic p, const ClassTriple& triple);
std::vector<LinearInequality> triangle_inequalities(Parabolic p);

/// Same construction from the full cup product (extended system); exposed
/// for comparison only.
std::vector<LinearInequality> extended_triangle_inequalities(Parabolic p);

std::vector<LinearInequality> chamber_inequalities();

/// P1, P2, P3, P4 triangle inequalities followed by the 12 chamber ones.
const std::vector<LinearInequality>& full_system();

/// Functionals only, in full_system() order.
std::vector<IntVector> full_system_functionals();

// --- Symmetry --------------------------------------------------------------

enum class SymmetryGroup { kS3, kS3xF };

/// Element of S3 x F acting on a^3 (or a*^3): blocks are permuted by
/// `slots` (block i moves to position slots[i]) and each block is mapped by
/// the diagram automorphism.
struct TripleSymmetry {
  std::array<int, 3> slots;
  DiagramAutomorphism automorphism;
};

std::vector<TripleSymmetry> symmetry_elements(SymmetryGroup g);

/// Image of a 12-vector of weight blocks; result is primitive when the input is.
IntVector act_on_functional(const TripleSymmetry& g, std::span<const Integer> f);
std::array<Weight, 3> act_on_triple(const TripleSymmetry& g, const std::array<Weight, 3>& t);

struct Orbit {
  IntVector representative;           ///< lexicographically minimal member
  std::vector<std::size_t> members;   ///< indices into the decomposed list
  std::size_t size() const { return members.size(); }
};

struct OrbitDecomposition {
  SymmetryGroup group;
  std::vector<Orbit> orbits;
  std::vector<std::size_t> sizes() const;
};

/// Partition a list that is closed under the group into orbits. Orbits are
/// ordered by their representative.
OrbitDecomposition orbit_decompose(std::span<const LinearInequality> system, SymmetryGroup g);

/// Triangle inequalities of one parabolic and kind.
std::vector<LinearInequality> select(std::span<const LinearInequality> system, int parabolic, InequalityKind kind);

}  // namespace d4
