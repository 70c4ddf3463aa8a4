#include "toricfold/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toricfold {

std::string to_string(QuotientFailure f) {
  switch (f) {
    case QuotientFailure::NotInjective: return "not_injective";
    case QuotientFailure::NotSaturated: return "not_saturated";
    case QuotientFailure::NotStrictlyConvex: return "not_strictly_convex";
  }
  return "unknown";
}

QuotientError::QuotientError(QuotientFailure m, const std::string& detail)
    : Error(to_string(m) + ": " + detail), mode(m) {}

namespace {

Integer I(std::int64_t x) { return Integer(static_cast<long>(x)); }

IntMatrix weight_matrix(const WeightDecomposition& w) {
  std::vector<IntVector> rows;
  for (const auto& m : w.expanded()) rows.push_back({I(m[0]), I(m[1])});
  return IntMatrix::from_rows(rows, 2);
}

// A nonzero x with B x >= 0, if any. The set {x : B x >= 0} is a cone in the
// plane whose boundary rays lie on the lines <m, x> = 0, so it suffices to
// test the directions orthogonal to each weight.
std::optional<Vec2> orthant_meets_image(const WeightDecomposition& w) {
  for (const auto& e : w.entries()) {
    const Vec2 perp{-e.weight[1], e.weight[0]};
    for (const Vec2& x : {perp, neg2(perp)}) {
      if (x == Vec2{0, 0}) continue;
      bool ok = true;
      for (const auto& f : w.entries())
        if (dot2(f.weight, x) < 0) {
          ok = false;
          break;
        }
      if (ok) return x;
    }
  }
  return std::nullopt;
}

LinearConstraint pairing(const Vec2& m, Relation rel, int rhs) {
  return {{Rational(static_cast<long>(m[0])), Rational(static_cast<long>(m[1]))}, rel, rhs};
}

// A(e_rep) is on a non-extreme ray iff it lies in the cone of the images off
// its ray, i.e. iff some x in Q^2 has <m_rep, x> = 1, <m_j, x> = 0 on the
// other preimages of the ray, and <m_k, x> <= 0 elsewhere.
bool ray_is_extreme(const std::vector<Vec2>& basis_weights, std::size_t rep, const std::vector<std::size_t>& same) {
  std::vector<LinearConstraint> cs;
  std::vector<bool> on_ray(basis_weights.size(), false);
  for (auto j : same) on_ray[j] = true;
  for (std::size_t k = 0; k < basis_weights.size(); ++k) {
    if (k == rep)
      cs.push_back(pairing(basis_weights[k], Relation::Equal, 1));
    else if (on_ray[k])
      cs.push_back(pairing(basis_weights[k], Relation::Equal, 0));
    else
      cs.push_back(pairing(basis_weights[k], Relation::LessEqual, 0));
  }
  return !rational_feasible(2, cs).has_value();
}

std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational k = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= k * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& generators) {
  std::set<IntVector> dirs;
  for (const auto& g : generators) {
    bool zero = std::all_of(g.begin(), g.end(), [](const Integer& x) { return x == 0; });
    if (!zero) dirs.insert(primitive_part(g));
  }
  std::vector<IntVector> all(dirs.begin(), dirs.end());
  if (!is_strictly_convex(all)) throw NotStrictlyConvexError("generators span a cone containing a line");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (others.empty() || !in_cone(others, all[i])) out.push_back(all[i]);
  }
  return out;
}

QuotientCone build_quotient(const WeightDecomposition& w) {
  QuotientCone q;
  const auto d = static_cast<std::size_t>(w.total_dim());
  q.B = weight_matrix(w);
  if (d == 0) {
    q.A = IntMatrix(0, 0);
    q.section = IntMatrix(0, 0);
    q.facets_computed = true;
    return q;
  }

  try {
    auto lat = quotient_lattice(q.B);
    q.A = std::move(lat.A);
    q.section = std::move(lat.section);
  } catch (const NotInjectiveError& e) {
    QuotientError err(QuotientFailure::NotInjective,
                      "the weights span a sublattice of rank " + std::to_string(e.rank) + " < 2");
    err.rank = e.rank;
    throw err;
  } catch (const NotSaturatedError& e) {
    QuotientError err(QuotientFailure::NotSaturated, e.what());
    err.invariant_factors = e.invariant_factors;
    throw err;
  }
  q.nprime_rank = d - 2;
  if (!(q.A * q.B).is_zero()) throw IntegrityError("quotient map does not kill the image of N");
  if (!(q.A * q.section == IntMatrix::identity(q.nprime_rank))) throw IntegrityError("section does not split A");

  const auto basis_weights = w.expanded();
  for (std::size_t i = 0; i < d; ++i) {
    PreimageLabel label;
    label.weight = basis_weights[i];
    label.copy = static_cast<std::int64_t>(i - w.offset(*w.index_of(basis_weights[i])));
    q.preimages.push_back(label);
  }
  if (q.nprime_rank == 0) {
    q.facets_computed = true;
    return q;
  }

  if (auto x = orthant_meets_image(w)) {
    std::ostringstream os;
    os << "B" << *x << " >= 0, so the positive orthant meets the image of N";
    QuotientError err(QuotientFailure::NotStrictlyConvex, os.str());
    err.line_witness = *x;
    throw err;
  }

  std::map<IntVector, std::vector<std::size_t>> by_direction;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector img = q.image(i);
    IntVector prim = primitive_part(img);
    q.preimages[i].image_primitive = (prim == img);
    by_direction[prim].push_back(i);
  }
  for (const auto& [dir, members] : by_direction) {
    const std::size_t idx = q.rays.size();
    q.rays.push_back(dir);
    q.ray_extreme.push_back(ray_is_extreme(basis_weights, members.front(), members));
    q.ray_multiplicity.push_back(members.size());
    for (auto i : members) q.preimages[i].ray = idx;
  }

  if (q.nprime_rank <= kFacetRankLimit && q.rays.size() <= kFacetRayLimit) {
    q.facets = dual_facets(q.rays);
    q.facets_computed = true;
  }
  return q;
}

std::vector<IntVector> QuotientCone::extreme_generators() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (ray_extreme[i]) out.push_back(rays[i]);
  return out;
}

bool QuotientCone::all_generators_extreme() const {
  return std::all_of(ray_extreme.begin(), ray_extreme.end(), [](bool b) { return b; });
}

bool primitivity_audit(const QuotientCone& q) {
  return std::all_of(q.preimages.begin(), q.preimages.end(),
                     [](const PreimageLabel& p) { return p.image_primitive; });
}

std::optional<IntMatrix> cones_isomorphic(const std::vector<IntVector>& rays1, const std::vector<IntVector>& rays2) {
  if (rays1.size() != rays2.size()) return std::nullopt;
  if (rays1.empty()) return IntMatrix(0, 0);
  const std::size_t n = rays1.front().size();
  if (rays2.front().size() != n) return std::nullopt;
  const std::set<IntVector> target(rays2.begin(), rays2.end());
  if (target.size() != rays2.size()) return std::nullopt;

  // Greedy basis among rays1.
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < rays1.size() && basis.size() < n; ++i) {
    std::vector<IntVector> trial;
    for (auto b : basis) trial.push_back(rays1[b]);
    trial.push_back(rays1[i]);
    if (rank_of(IntMatrix::from_rows(trial)) == trial.size()) basis.push_back(i);
  }
  if (basis.size() != n) return std::nullopt;
  std::vector<IntVector> cols;
  for (auto b : basis) cols.push_back(rays1[b]);
  auto inv = rational_inverse(IntMatrix::from_columns(cols));
  if (!inv) return std::nullopt;

  std::vector<std::size_t> choice(n);
  std::vector<bool> used(rays2.size(), false);
  std::optional<IntMatrix> found;
  auto attempt = [&]() {
    // g = T * M^-1 where T has the chosen target rays as columns.
    IntMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += Rational(rays2[choice[k]][r]) * (*inv)[k][c];
        if (s.get_den() != 1) return false;
        g(r, c) = s.get_num();
      }
    if (!is_unimodular(g)) return false;
    for (const auto& u : rays1)
      if (!target.count(g * u)) return false;
    found = g;
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return attempt();
    for (std::size_t j = 0; j < rays2.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      choice[k] = j;
      if (self(self, k + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  search(search, 0);
  return found;
}

IntMatrix descend_element(const WeightPermutation& perm, const QuotientCone& q) {
  const std::size_t d = q.preimages.size();
  if (perm.on_basis.size() != d) throw InvalidArgument("permutation does not match the quotient");
  if (q.nprime_rank == 0) return IntMatrix(0, 0);
  IntMatrix P(d, d);
  for (std::size_t i = 0; i < d; ++i) P(perm.on_basis[i], i) = 1;
  IntMatrix AP = q.A * P;
  IntMatrix D = AP * q.section;
  if (!(D * q.A == AP)) throw IntegrityError("basis permutation does not preserve the image of N");
  if (!is_unimodular(D)) throw IntegrityError("descended matrix is not unimodular");
  std::set<IntVector> rays(q.rays.begin(), q.rays.end());
  for (const auto& r : q.rays)
    if (!rays.count(D * r)) throw IntegrityError("descended matrix does not permute the rays of the cone");
  return D;
}

std::vector<IntMatrix> descend_group_action(const Fan2D&, const LatticeAutGroup& g, const QuotientCone& q,
                                            const WeightDecomposition& w) {
  std::vector<IntMatrix> out;
  for (const auto& perm : weight_action(g, w)) out.push_back(descend_element(perm, q));
  return out;
}

IntMatrix blowdown_fibration(const WeightDecomposition& w, const QuotientCone& q, const WeightDecomposition& w0,
                             const QuotientCone& q0) {
  const std::size_t d = q.preimages.size(), d0 = q0.preimages.size();
  IntMatrix Pi(d0, d);
  for (std::size_t k0 = 0; k0 < w0.entries().size(); ++k0) {
    const auto& e0 = w0.entries()[k0];
    auto k = w.index_of(e0.weight);
    if (!k || w.entries()[*k].multiplicity < e0.multiplicity) {
      std::ostringstream os;
      os << "weight " << e0.weight << " has multiplicity " << e0.multiplicity << " downstairs but "
         << (k ? w.entries()[*k].multiplicity : 0) << " upstairs";
      throw FibrationError(os.str());
    }
    for (std::int64_t c = 0; c < e0.multiplicity; ++c)
      Pi(w0.offset(k0) + static_cast<std::size_t>(c), w.offset(*k) + static_cast<std::size_t>(c)) = 1;
  }
  if (!(Pi * q.B == q0.B)) throw IntegrityError("projection does not intertwine the weight maps");
  if (q0.nprime_rank == 0) return IntMatrix(0, q.nprime_rank);

  IntMatrix A0Pi = q0.A * Pi;
  IntMatrix F = A0Pi * q.section;
  if (!(F * q.A == A0Pi)) throw IntegrityError("fibration square does not commute");
  auto snf = smith_normal_form(F);
  if (snf.rank() != q0.nprime_rank) throw IntegrityError("fibration map is not surjective");
  for (const auto& s : snf.invariant_factors())
    if (s != 1) throw IntegrityError("fibration map is not surjective onto the lattice");

  std::set<IntVector> hit;
  for (const auto& r : q.rays) {
    IntVector img = F * r;
    if (std::all_of(img.begin(), img.end(), [](const Integer& x) { return x == 0; })) continue;
    if (!in_cone(q0.rays, img)) throw IntegrityError("fibration map sends a ray outside the smaller cone");
    hit.insert(primitive_part(img));
  }
  for (const auto& r0 : q0.rays)
    if (!hit.count(r0)) throw IntegrityError("fibration map misses a ray of the smaller cone");
  return F;
}

IntMatrix blowdown_fibration(const Fan2D& f, const Fan2D& f0) {
  auto w = weight_decomposition(f);
  auto w0 = weight_decomposition(f0);
  for (const auto& e0 : w0.entries())
    if (w.multiplicity(e0.weight) < e0.multiplicity)
      throw FibrationError("the deformation weights of the smaller fan do not embed in those of the larger one");
  auto q = build_quotient(w);
  auto q0 = build_quotient(w0);
  return blowdown_fibration(w, q, w0, q0);
}

}  // namespace toricfold
