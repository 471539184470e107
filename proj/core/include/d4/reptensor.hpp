#pragma once

// Irreducible representations of Spin(8): Weyl dimension, Freudenthal weight
// multiplicities, Klimyk tensor multiplicities and invariant dimensions.

#include "d4/cone.hpp"
#include "d4/hilbert.hpp"
#include "d4/rootdata.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace d4 {

/// Highest weight sum a_i omega_i with a_i >= 0.
struct DominantWeight {
  std::array<int, 4> a{};

  DominantWeight() = default;
  DominantWeight(int a1, int a2, int a3, int a4);
  static DominantWeight from_weight(const Weight& w);  ///< throws unless dominant integral

  Weight weight() const;
  /// 2 * eps coordinates.
  std::array<int, 4> doubled() const;
  std::string str() const;  ///< e.g. "w1+2w3", "0"

  auto operator<=>(const DominantWeight&) const = default;
};

Integer weyl_dimension(const DominantWeight& lambda);

/// Weight multiplicities of V(lambda), keyed by doubled eps coordinates.
class WeightMultiplicityTable {
 public:
  explicit WeightMultiplicityTable(const DominantWeight& lambda);

  const DominantWeight& highest_weight() const { return lambda_; }
  /// Multiplicities of the dominant weights only.
  const std::map<std::array<int, 4>, std::int64_t>& dominant() const { return dominant_; }
  /// m(x) for any doubled weight x (0 when x is not a weight).
  std::int64_t multiplicity(const std::array<int, 4>& doubled) const;
  /// Every weight with its multiplicity (Weyl orbits expanded).
  std::map<std::array<int, 4>, std::int64_t> all_weights() const;
  Integer total() const;

 private:
  DominantWeight lambda_;
  std::map<std::array<int, 4>, std::int64_t> dominant_;
};

/// Memoized per highest weight; thread-safe.
std::shared_ptr<const WeightMultiplicityTable> weight_multiplicities(const DominantWeight& lambda);

/// Dominant Weyl conjugate of a doubled eps vector.
std::array<int, 4> dominant_conjugate(const std::array<int, 4>& doubled);

/// Multiplicity of V(nu) in V(lambda) (x) V(mu), by Klimyk's formula with the
/// weight table of mu.
std::int64_t tensor_multiplicity(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu);

/// dim (V(lambda) (x) V(mu) (x) V(nu))^{Spin(8)}.
std::int64_t invariant_dim(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu);

using DominantTriple = std::array<DominantWeight, 3>;
DominantTriple to_dominant_triple(const WeightTriple& t);
WeightTriple to_weight_triple(const DominantTriple& t);

struct GeneratorCheck {
  DominantTriple triple;
  std::int64_t invariant_dim;
};

struct GeneratorReport {
  std::vector<GeneratorCheck> checks;
  bool all_positive() const;
};

GeneratorReport verify_generators(const std::vector<DominantTriple>& reps);

struct SampleOutcome {
  DominantTriple triple;
  bool in_cone;
  std::int64_t invariant_dim;
  bool consistent() const { return in_cone == (invariant_dim > 0); }
};

struct SaturationReport {
  std::uint64_t seed = 0;
  int bound = 0;
  std::vector<SampleOutcome> samples;
  std::size_t in_cone_count() const;
  std::vector<SampleOutcome> violations() const;
  bool ok() const { return violations().empty(); }
};

/// Random triples in the root-lattice class (rejection sampling on
/// fundamental coordinates in [0, bound]), checking
/// cone membership <=> invariant_dim > 0.
SaturationReport saturation_sample(std::size_t count, int bound, std::uint64_t seed, const HRep& eps_cone);

}  // namespace d4
