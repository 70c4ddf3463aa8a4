#include "toricfold/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toricfold {

std::string to_string(GroupType t) {
  switch (t) {
    case GroupType::C1: return "C1";
    case GroupType::C2: return "C2";
    case GroupType::C3: return "C3";
    case GroupType::C4: return "C4";
    case GroupType::C6: return "C6";
    case GroupType::D1: return "D1";
    case GroupType::D2: return "D2";
    case GroupType::D3: return "D3";
    case GroupType::D4: return "D4";
    case GroupType::D6: return "D6";
  }
  return "?";
}

int element_order(const Mat2& g) {
  Mat2 p = g;
  for (int k = 1; k <= 12; ++k) {
    if (p == Mat2::identity()) return k;
    p = p * g;
  }
  std::ostringstream os;
  os << "matrix " << g << " has no finite order up to 12";
  throw IntegrityError(os.str());
}

GroupType classify_group(const std::vector<Mat2>& elements) {
  const std::size_t n = elements.size();
  std::size_t rotations = 0;
  int max_rotation_order = 1;
  bool has_minus_identity = false;
  for (const auto& g : elements) {
    int k = element_order(g);
    if (k != 1 && k != 2 && k != 3 && k != 4 && k != 6)
      throw IntegrityError("element order " + std::to_string(k) + " is impossible in GL2(Z)");
    if (g.det() == 1) {
      ++rotations;
      max_rotation_order = std::max(max_rotation_order, k);
    }
    if (g == Mat2{-1, 0, 0, -1}) has_minus_identity = true;
  }
  // The rotation subgroup is cyclic, so it must contain an element of full order.
  if (rotations == 0 || static_cast<std::size_t>(max_rotation_order) != rotations)
    throw IntegrityError("rotation subgroup of order " + std::to_string(rotations) + " is not cyclic");
  static const std::map<std::size_t, GroupType> cyclic = {
      {1, GroupType::C1}, {2, GroupType::C2}, {3, GroupType::C3}, {4, GroupType::C4}, {6, GroupType::C6}};
  static const std::map<std::size_t, GroupType> dihedral = {
      {1, GroupType::D1}, {2, GroupType::D2}, {3, GroupType::D3}, {4, GroupType::D4}, {6, GroupType::D6}};
  GroupType t;
  if (rotations == n) {
    t = cyclic.at(rotations);
  } else if (2 * rotations == n) {
    t = dihedral.at(rotations);
  } else {
    throw IntegrityError("rotation subgroup has index other than 1 or 2");
  }
  if (t == GroupType::C2 && !has_minus_identity) throw IntegrityError("C2 without -I");
  return t;
}

LatticeAutGroup lattice_automorphisms(const Fan2D& f) {
  LatticeAutGroup g;
  g.elements = all_isomorphisms(f, f);
  const std::set<Mat2> members(g.elements.begin(), g.elements.end());
  if (!members.count(Mat2::identity())) throw IntegrityError("identity missing from automorphism group");
  for (const auto& x : g.elements) {
    if (!members.count(x.inverse())) throw IntegrityError("automorphism group not closed under inverses");
    for (const auto& y : g.elements)
      if (!members.count(x * y)) throw IntegrityError("automorphism group not closed under products");
  }
  for (const auto& x : g.elements) {
    std::vector<std::size_t> perm;
    for (const auto& u : f.rays()) {
      auto j = f.index_of(x * u);
      if (!j) throw IntegrityError("automorphism does not permute the rays");
      perm.push_back(*j);
    }
    g.ray_permutations.push_back(std::move(perm));
  }
  g.type = classify_group(g.elements);
  return g;
}

FoldabilityWitness foldability(const LatticeAutGroup& g) {
  FoldabilityWitness w;
  for (const auto& x : g.elements) {
    if (x.det() != 1 || x == Mat2::identity()) continue;
    int k = element_order(x);
    // elements are sorted, so the first hit of an order is the least matrix
    if (k > w.p) {
      w.p = k;
      w.rotation = x;
    }
  }
  if (w.rotation) {
    const Mat2& r = *w.rotation;
    Mat2 shifted{r.a - 1, r.b, r.c, r.d - 1};
    if (shifted.det() == 0) throw IntegrityError("rotation witness fixes a nonzero vector");
    w.foldable = true;
  }
  return w;
}

FoldabilityWitness foldability(const Fan2D& f) { return foldability(lattice_automorphisms(f)); }

Vec2 dual_action(const Mat2& g, const Vec2& m) { return covector_times(m, g.inverse()); }

WeightPermutation weight_action(const Mat2& g, const WeightDecomposition& w) {
  WeightPermutation p{g, {}, {}};
  const auto& entries = w.entries();
  p.on_basis.resize(static_cast<std::size_t>(w.total_dim()));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Vec2 image = dual_action(g, entries[k].weight);
    auto j = w.index_of(image);
    if (!j) {
      std::ostringstream os;
      os << "weight " << entries[k].weight << " maps to " << image << ", which is not a weight";
      throw WeightActionError(os.str());
    }
    if (entries[*j].multiplicity != entries[k].multiplicity) {
      std::ostringstream os;
      os << "weight " << entries[k].weight << " and its image " << image << " have different multiplicities";
      throw WeightActionError(os.str());
    }
    p.on_weights.push_back(*j);
    for (std::int64_t c = 0; c < entries[k].multiplicity; ++c)
      p.on_basis[w.offset(k) + static_cast<std::size_t>(c)] = w.offset(*j) + static_cast<std::size_t>(c);
  }
  return p;
}

std::vector<WeightPermutation> weight_action(const LatticeAutGroup& g, const WeightDecomposition& w) {
  std::vector<WeightPermutation> out;
  for (const auto& x : g.elements) out.push_back(weight_action(x, w));
  return out;
}

}  // namespace toricfold
