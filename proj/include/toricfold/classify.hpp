#pragma once

// Reduction of a fan to a minimal model by equivariant blow-downs, the cscK
// existence flag, a seeded generator of foldable fans, and the aggregated
// analysis of a single fan.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricfold/deformation.hpp"
#include "toricfold/fan.hpp"
#include "toricfold/quotient.hpp"
#include "toricfold/singularity.hpp"
#include "toricfold/symmetry.hpp"

namespace toricfold {

enum class CscK { YesByFoldability, RigidClassical, Unknown };
std::string to_string(CscK c);

// One equivariant contraction: the rays removed, in the coordinates of the
// fan they were removed from.
struct BlowdownStep {
  std::vector<Vec2> orbit;
};

struct ClassificationResult {
  bool foldable = false;
  int p = 1;
  std::optional<Mat2> rotation;  // the orbits below are orbits of this element
  std::string minimal_model;     // catalog name or "other"
  Fan2D minimal;
  std::optional<Mat2> model_isomorphism;  // minimal -> catalog model
  std::vector<BlowdownStep> blowdown_sequence;
  bool rigid = false;
  CscK csck = CscK::Unknown;
};

// Names the minimal model may be identified with.
const std::vector<std::string>& minimal_model_names();

// Contracts whole orbits of the input's witness rotation (single rays when
// not foldable), always the orbit holding the least contractible ray, until
// none remains. The replay of the sequence is checked before returning.
ClassificationResult minimal_model(const Fan2D& f);

// Blows the orbits back up, last step first. Throws IntegrityError when a
// step is not a blow-up of the fan it is applied to.
Fan2D replay_blowups(const Fan2D& minimal, const std::vector<BlowdownStep>& steps);

CscK csck_flag(const ClassificationResult& c);

// Orbit of v under the cyclic group generated by g.
std::vector<Vec2> rotation_orbit(const Mat2& g, const Vec2& v);

struct RandomFanOptions {
  std::uint64_t seed = 0;
  std::string base = "Y2";
  int rounds = 0;
  int order = 0;               // rotation order to blow up along; 0 takes the largest
  std::size_t max_rays = 30;   // rounds that would exceed this are skipped
};

class InvalidBase : public Error {
 public:
  using Error::Error;
};

// Each round blows up the full orbit of a uniformly chosen corner.
Fan2D random_foldable_fan(const RandomFanOptions& opts);

// Every section is computed independently; a failing section leaves its
// value unset and records the reason.
struct FullReport {
  Fan2D fan;
  std::vector<std::int64_t> self_intersections;
  LatticeAutGroup group;
  FoldabilityWitness foldability;
  DemazureRoots roots;
  bool aut0_torus = false;
  WeightDecomposition weights;
  std::int64_t oracle_dimension = 0;
  std::optional<QuotientCone> quotient;
  std::string quotient_error;
  std::optional<QuotientFailure> quotient_failure;
  bool primitive_images = false;
  std::optional<SingularityReport> singularity;
  std::string singularity_error;
  std::vector<IntMatrix> descended_group;  // one per group element, in group order
  std::string descent_error;
  std::optional<ClassificationResult> classification;
  std::string classification_error;
};

FullReport full_report(const Fan2D& f);

}  // namespace toricfold
