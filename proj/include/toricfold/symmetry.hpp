#pragma once

// Lattice automorphisms of a fan, their crystallographic type, foldability,
// and the induced action on deformation weights.

#include <optional>
#include <string>
#include <vector>

#include "toricfold/deformation.hpp"
#include "toricfold/fan.hpp"

namespace toricfold {

enum class GroupType { C1, C2, C3, C4, C6, D1, D2, D3, D4, D6 };
std::string to_string(GroupType t);

struct LatticeAutGroup {
  std::vector<Mat2> elements;  // sorted; identity included
  GroupType type = GroupType::C1;
  // ray_permutations[k][i] = index of elements[k] * u_i
  std::vector<std::vector<std::size_t>> ray_permutations;
};

LatticeAutGroup lattice_automorphisms(const Fan2D& f);

// Order of a finite-order element of GL2(Z); IntegrityError otherwise.
int element_order(const Mat2& g);

// Type from the group order and the (order, det) profile of its elements.
// Throws IntegrityError when no point-group type fits.
GroupType classify_group(const std::vector<Mat2>& elements);

struct FoldabilityWitness {
  bool foldable = false;
  std::optional<Mat2> rotation;
  int p = 1;
};

// Maximal-order rotation in the group, ties broken by the least matrix.
FoldabilityWitness foldability(const LatticeAutGroup& g);
FoldabilityWitness foldability(const Fan2D& f);

// Dual action m -> m g^{-1}. on_weights permutes distinct entries; on_basis
// permutes the expanded basis sending copy c of m to copy c of g.m.
struct WeightPermutation {
  Mat2 element;
  std::vector<std::size_t> on_weights;
  std::vector<std::size_t> on_basis;
};

class WeightActionError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

WeightPermutation weight_action(const Mat2& g, const WeightDecomposition& w);
std::vector<WeightPermutation> weight_action(const LatticeAutGroup& g, const WeightDecomposition& w);

// Image of a covector under the dual action.
Vec2 dual_action(const Mat2& g, const Vec2& m);

}  // namespace toricfold
