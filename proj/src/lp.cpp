// Dense two-phase simplex over Q with Bland's rule. Problems here are tiny
// (tens of constraints), so clarity wins over sparse bookkeeping.

#include <cstddef>

#include "toricfold/intlat.hpp"

namespace toricfold {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& objective) {
    Rational inv = 1 / a_[r][c];
    for (auto& x : a_[r]) x *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      Rational k = row[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (a_[r][j] != 0) row[j] -= k * a_[r][j];
    };
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (i != r) eliminate(a_[i]);
    eliminate(objective);
    basis_[r] = c;
  }

  // objective holds reduced costs (negated) with the value in the last slot;
  // returns false when unbounded.
  bool optimize(std::vector<Rational>& objective, std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (objective[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed_cols) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter, objective);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

void check_shapes(std::size_t dim, std::span<const LinearConstraint> constraints,
                  const std::vector<Rational>* objective) {
  for (const auto& c : constraints)
    if (c.coeffs.size() != dim) throw InvalidArgument("constraint has wrong dimension");
  if (objective && objective->size() != dim) throw InvalidArgument("objective has wrong dimension");
}

LpResult solve(std::size_t dim, std::span<const LinearConstraint> constraints,
               const std::vector<Rational>* objective) {
  check_shapes(dim, constraints, objective);
  const std::size_t m = constraints.size();
  std::size_t slacks = 0;
  for (const auto& c : constraints)
    if (c.relation != Relation::Equal) ++slacks;
  // Columns: x+ (dim), x- (dim), slacks, artificials (m).
  const std::size_t n_struct = 2 * dim + slacks;
  const std::size_t n_total = n_struct + m;
  Tableau t(m, n_total);
  std::size_t slack = 2 * dim;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    const bool flip = c.rhs < 0;
    const int sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < dim; ++j) {
      t.at(i, j) = sign * c.coeffs[j];
      t.at(i, dim + j) = -sign * c.coeffs[j];
    }
    if (c.relation == Relation::LessEqual) t.at(i, slack++) = sign;
    if (c.relation == Relation::GreaterEqual) t.at(i, slack++) = -sign;
    t.rhs(i) = sign * c.rhs;
    t.at(i, n_struct + i) = 1;
    t.basis()[i] = n_struct + i;
  }

  LpResult result;
  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(n_total + 1);
  for (std::size_t i = 0; i < m; ++i) phase1[n_struct + i] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n_total; ++j) phase1[j] -= (j == n_total ? t.rhs(i) : t.at(i, j));
  t.optimize(phase1, n_total);
  if (phase1[n_total] != 0) return result;

  // Drive remaining artificials out of the basis; rows that cannot pivot are
  // linearly dependent and can be discarded.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis()[i] < n_struct) {
      ++i;
      continue;
    }
    std::size_t col = n_struct;
    for (std::size_t j = 0; j < n_struct; ++j)
      if (t.at(i, j) != 0) {
        col = j;
        break;
      }
    if (col == n_struct) {
      t.drop_row(i);
    } else {
      t.pivot(i, col, phase1);
      ++i;
    }
  }

  result.feasible = true;
  std::vector<Rational> phase2(n_total + 1);
  if (objective) {
    for (std::size_t j = 0; j < dim; ++j) {
      phase2[j] = -(*objective)[j];
      phase2[dim + j] = (*objective)[j];
    }
    for (std::size_t i = 0; i < t.rows(); ++i) {
      std::size_t b = t.basis()[i];
      if (phase2[b] == 0) continue;
      Rational k = phase2[b];
      for (std::size_t j = 0; j <= n_total; ++j) phase2[j] -= k * (j == n_total ? t.rhs(i) : t.at(i, j));
    }
    if (!t.optimize(phase2, n_struct)) {
      result.unbounded = true;
      return result;
    }
    result.value = phase2[n_total];
  }

  std::vector<Rational> values(n_total, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) values[t.basis()[i]] = t.rhs(i);
  std::vector<Rational> x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = values[j] - values[dim + j];
  result.point = RationalPoint::from(x);
  return result;
}

}  // namespace

std::optional<RationalPoint> rational_feasible(std::size_t dim, std::span<const LinearConstraint> constraints) {
  auto r = solve(dim, constraints, nullptr);
  if (!r.feasible) return std::nullopt;
  return r.point;
}

LpResult rational_maximize(std::size_t dim, std::span<const LinearConstraint> constraints,
                           const std::vector<Rational>& objective) {
  return solve(dim, constraints, &objective);
}

bool in_cone(std::span<const IntVector> generators, const IntVector& x) {
  const std::size_t r = generators.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < r; ++i) {
    LinearConstraint c{std::vector<Rational>(r, Rational(0)), Relation::GreaterEqual, 0};
    c.coeffs[i] = 1;
    cs.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    LinearConstraint c{std::vector<Rational>(r), Relation::Equal, Rational(x[k])};
    for (std::size_t i = 0; i < r; ++i) {
      if (generators[i].size() != x.size()) throw InvalidArgument("generator has wrong dimension");
      c.coeffs[i] = generators[i][k];
    }
    cs.push_back(std::move(c));
  }
  return rational_feasible(r, cs).has_value();
}

bool is_strictly_convex(std::span<const IntVector> generators) {
  if (generators.empty()) return true;
  const std::size_t r = generators.size(), n = generators.front().size();
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < r; ++i) {
    LinearConstraint c{std::vector<Rational>(r, Rational(0)), Relation::GreaterEqual, 0};
    c.coeffs[i] = 1;
    cs.push_back(std::move(c));
  }
  cs.push_back({std::vector<Rational>(r, Rational(1)), Relation::Equal, 1});
  for (std::size_t k = 0; k < n; ++k) {
    LinearConstraint c{std::vector<Rational>(r), Relation::Equal, 0};
    for (std::size_t i = 0; i < r; ++i) c.coeffs[i] = generators[i][k];
    cs.push_back(std::move(c));
  }
  return !rational_feasible(r, cs).has_value();
}

}  // namespace toricfold
