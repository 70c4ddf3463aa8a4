#pragma once

// Demazure roots and the torus weight decomposition of first-order
// deformations of a smooth complete toric surface.

#include <cstdint>
#include <vector>

#include "toricfold/fan.hpp"

namespace toricfold {

struct DemazureRoots {
  std::vector<Vec2> roots;  // sorted lexicographically
  std::int64_t aut0_dim = 2;
};

// Characters m with <m, u> = 1 on exactly one ray and <= 0 on the others.
DemazureRoots demazure_roots(const Fan2D& f);
bool aut0_is_torus(const Fan2D& f);

struct WeightEntry {
  Vec2 weight;
  std::int64_t multiplicity = 0;
  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

// Distinct weights, sorted lexicographically, with positive multiplicities.
class WeightDecomposition {
 public:
  WeightDecomposition() = default;
  // Merges repeated weights and drops zero multiplicities; negative
  // multiplicities are rejected.
  static WeightDecomposition from_entries(std::vector<WeightEntry> entries);

  const std::vector<WeightEntry>& entries() const { return entries_; }
  std::int64_t total_dim() const { return total_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t multiplicity(const Vec2& m) const;

  // One weight per copy, in basis order: weights ascending, copies adjacent.
  std::vector<Vec2> expanded() const;
  // Offset of the first copy of entry k in the expanded list.
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  std::optional<std::size_t> index_of(const Vec2& m) const;
  Vec2 weight_sum() const;

  friend bool operator==(const WeightDecomposition& x, const WeightDecomposition& y) {
    return x.entries_ == y.entries_;
  }

 private:
  std::vector<WeightEntry> entries_;
  std::vector<std::size_t> offsets_;
  std::int64_t total_ = 0;
};

// Number of rays u_i with <m, u_i> = -1 and <m, u_{i-1}>, <m, u_{i+1}> < 0.
std::int64_t weight_multiplicity(const Fan2D& f, const Vec2& m);

// Enumerated ray by ray along the segment <m, u_i> = -1, <m, u_{i+-1}> <= -1.
WeightDecomposition weight_decomposition(const Fan2D& f);

// Sum over rays of max(0, -a_i - 1); an independent count of the same
// dimension, used to cross-check the enumeration.
std::int64_t oracle_dimension(const Fan2D& f);

}  // namespace toricfold
