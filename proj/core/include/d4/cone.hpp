#pragma once

// Exact polyhedral cones {x : <a, x> >= 0 for all a} over Q^d.

#include "d4/arith.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace d4 {

struct HRep {
  std::size_t dim = 0;
  std::vector<IntVector> functionals;

  static HRep from(std::vector<IntVector> functionals);
  /// Primitive form with exact duplicates removed (first occurrence kept).
  HRep deduplicated() const;
};

struct VRep {
  std::size_t dim = 0;
  std::vector<IntVector> rays;       ///< primitive, sorted lexicographically
  std::vector<IntVector> lineality;  ///< basis of the lineality space
  bool pointed() const { return lineality.empty(); }
};

/// Extremal rays and lineality space by incremental double description.
VRep double_description(const HRep& h);

/// Dimension of the cone spanned by the rays and lineality space.
std::size_t cone_dimension(const VRep& v);

struct Facet {
  IntVector functional;                 ///< first input functional defining it
  std::vector<std::size_t> inputs;      ///< all input indices defining this facet
  std::vector<std::size_t> tight_rays;  ///< indices into VRep::rays
};

struct FacetAnalysis {
  std::size_t cone_dim = 0;
  std::vector<Facet> facets;
  std::vector<std::size_t> non_facets;  ///< inputs that do not define a facet
  std::size_t merged() const;           ///< inputs beyond the first on a shared facet
};

FacetAnalysis facets(const HRep& h, const VRep& v);
FacetAnalysis facets(const HRep& h);

struct IrredundancyCertificate {
  bool irredundant = false;
  std::size_t cone_dim = 0;
  std::size_t ray_count = 0;
  /// For input i: cone_dim - 1 independent tight rays (empty when not a facet).
  std::vector<std::vector<std::size_t>> witnesses;
  std::vector<std::size_t> redundant;                         ///< not facets
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;  ///< (later, earlier) on the same facet
  std::string text(const HRep& h, const VRep& v) const;
};

IrredundancyCertificate is_irredundant(const HRep& h, const VRep& v);
IrredundancyCertificate is_irredundant(const HRep& h);

bool contains(const HRep& h, std::span<const Rational> point);
bool contains(const HRep& h, std::span<const Integer> point);

/// Index of the first violated functional, if any.
std::optional<std::size_t> first_violated(const HRep& h, std::span<const Rational> point);

std::string hrep_json(const HRep& h);
std::string vrep_json(const VRep& v);
HRep read_hrep_json(const std::string& text);
VRep read_vrep_json(const std::string& text);

}  // namespace d4
