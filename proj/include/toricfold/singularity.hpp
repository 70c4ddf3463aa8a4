#pragma once

// Singularity type of an affine toric variety given by a strictly convex
// rational cone: Q-Gorenstein, Gorenstein, simplicial, smooth, terminal.

#include <optional>
#include <string>
#include <vector>

#include "toricfold/quotient.hpp"

namespace toricfold {

enum class TerminalMethod { Box, Fiber, Skipped };
std::string to_string(TerminalMethod m);

// The generators are the primitive vectors the cone was presented with (for
// a quotient cone, the primitive parts of the images A(e_i)). When one of them
// is not extreme the generator-level and cone-level Gorenstein tests can
// disagree, and both are reported.
struct SingularityReport {
  // <m', u> = 1 solvable over every generator u.
  bool q_gorenstein = false;
  std::optional<std::vector<Rational>> rational_certificate;
  bool gorenstein = false;
  std::optional<IntVector> certificate;
  // The same tests over the extreme rays only.
  bool generators_extreme = true;
  bool cone_q_gorenstein = false;
  bool cone_gorenstein = false;
  std::optional<IntVector> cone_certificate;
  // Over the extreme rays.
  bool simplicial = false;
  bool smooth = false;
  // Lattice points of conv(0, generators) other than 0 and its vertices.
  std::vector<IntVector> vertices;
  std::vector<IntVector> offenders;
  // Whether the polytope's only lattice points are its vertices; unset when
  // the enumeration was skipped.
  std::optional<bool> only_vertices;
  // Terminal requires Q-Gorenstein and only_vertices.
  bool terminal = false;
  TerminalMethod method = TerminalMethod::Skipped;
  std::optional<Vec2> weight_sum;  // set when the cone came from weights
};

// Box scans above this many lattice points are not attempted.
inline constexpr std::size_t kBoxPointLimit = std::size_t(1) << 20;
// Box scans that need an LP per point stop at this many points.
inline constexpr std::size_t kBoxLpPointLimit = std::size_t(1) << 14;

// For a cone given directly by generators (made primitive and deduplicated).
// Only the box scan is available here.
SingularityReport cone_singularities(const std::vector<IntVector>& generators);

// For the quotient cone of a weight decomposition. Uses the box scan when it
// is small enough and otherwise enumerates the height-one slice through
// the fibres of Z^d -> N'.
SingularityReport singularity_report(const QuotientCone& q, const WeightDecomposition& w);

// The two enumerators, exposed for cross-checking. Both return nullopt when
// they do not apply; offenders are sorted.
std::optional<std::vector<IntVector>> box_offenders(const std::vector<IntVector>& generators,
                                                    const std::vector<IntVector>& vertices,
                                                    const std::vector<IntVector>& facets,
                                                    const std::optional<IntVector>& certificate,
                                                    std::size_t point_limit = kBoxPointLimit);
std::optional<std::vector<IntVector>> fiber_offenders(const QuotientCone& q, const WeightDecomposition& w);

}  // namespace toricfold
