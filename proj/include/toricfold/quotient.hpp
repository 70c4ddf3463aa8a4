#pragma once

// The exact sequence 0 -> N -> Z^d -> N' -> 0 built from a weight
// decomposition, the cone sigma = A(positive orthant) in N', its
// singularity type, and the maps it inherits from symmetries and blow-downs.

#include <optional>
#include <string>
#include <vector>

#include "toricfold/deformation.hpp"
#include "toricfold/intlat.hpp"
#include "toricfold/symmetry.hpp"

namespace toricfold {

enum class QuotientFailure { NotInjective, NotSaturated, NotStrictlyConvex };
std::string to_string(QuotientFailure f);

class QuotientError : public Error {
 public:
  QuotientError(QuotientFailure mode, const std::string& detail);
  QuotientFailure mode;
  std::size_t rank = 0;                    // NotInjective
  std::vector<Integer> invariant_factors;  // NotSaturated
  std::optional<Vec2> line_witness;        // NotStrictlyConvex: B x >= 0 with x != 0
};

// Basis vector of Z^d: copy `copy` of `weight`, and the generator of sigma
// its image lies on.
struct PreimageLabel {
  Vec2 weight;
  std::int64_t copy = 0;
  std::size_t ray = 0;
  bool image_primitive = true;
};

struct QuotientCone {
  std::size_t nprime_rank = 0;
  IntMatrix B;        // d x 2, rows are the weights in basis order
  IntMatrix A;        // (d-2) x d
  IntMatrix section;  // d x (d-2), A * section = I
  // Primitive parts of the images A(e_i), deduplicated and sorted. An image
  // can land strictly inside a face, so ray_extreme marks which of these
  // span extreme rays of sigma.
  std::vector<IntVector> rays;
  std::vector<bool> ray_extreme;
  std::vector<std::size_t> ray_multiplicity;    // preimages per generator
  std::vector<PreimageLabel> preimages;         // one per basis vector
  std::vector<IntVector> facets;                // inward normals in M'
  bool facets_computed = false;

  IntVector image(std::size_t basis_index) const { return A.column(basis_index); }
  std::vector<IntVector> extreme_generators() const;
  bool all_generators_extreme() const;
};

// Facets are computed for cones up to this rank and ray count; beyond that
// the facet list is left empty.
inline constexpr std::size_t kFacetRankLimit = 6;
inline constexpr std::size_t kFacetRayLimit = 12;

// A zero-dimensional decomposition yields the rank-0 quotient.
QuotientCone build_quotient(const WeightDecomposition& w);

// true iff every A(e_i) was primitive before normalization.
bool primitivity_audit(const QuotientCone& q);

// Extreme rays of the cone spanned by the given vectors (made primitive,
// deduplicated, sorted). Requires a strictly convex cone.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& generators);

// g in GL(n, Z) with g * rays1 = rays2 as sets, by matching a basis of
// rays1 against ordered choices of rays2.
std::optional<IntMatrix> cones_isomorphic(const std::vector<IntVector>& rays1, const std::vector<IntVector>& rays2);

// One matrix on N' per group element, in group order: D = A * P * section
// where P permutes the basis of Z^d as the dual weight action does.
std::vector<IntMatrix> descend_group_action(const Fan2D& f, const LatticeAutGroup& g, const QuotientCone& q,
                                            const WeightDecomposition& w);
IntMatrix descend_element(const WeightPermutation& perm, const QuotientCone& q);

class FibrationError : public Error {
 public:
  using Error::Error;
};

// Surjection N' -> N'_0 induced by forgetting the basis vectors of Z^d that
// have no counterpart in the smaller decomposition.
IntMatrix blowdown_fibration(const Fan2D& f, const Fan2D& f0);
IntMatrix blowdown_fibration(const WeightDecomposition& w, const QuotientCone& q, const WeightDecomposition& w0,
                             const QuotientCone& q0);

}  // namespace toricfold
