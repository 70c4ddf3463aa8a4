// Facets of cone(G) = { x : exists lambda >= 0, x = G lambda } by eliminating
// lambda. Rows are homogeneous integer forms over (x, lambda): equalities
// first absorb one lambda each, then Fourier-Motzkin handles the rest.

#include <set>

#include "toricfold/intlat.hpp"

namespace toricfold {

namespace {

using Row = IntVector;

void normalize(Row& r) {
  Integer g = content(r);
  if (g > 1)
    for (auto& x : r) x /= g;
}

bool is_zero_row(const Row& r) {
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

// row := |e| * row - sign(e) * c * eq, where e and c are the coefficients of
// column `col` in eq and row. Scaling by |e| > 0 keeps inequality direction.
Row eliminate_with_equality(const Row& row, const Row& eq, std::size_t col) {
  const Integer& e = eq[col];
  const Integer& c = row[col];
  Integer scale = e < 0 ? Integer(-e) : e;
  Integer k = e < 0 ? Integer(-c) : c;
  Row out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = scale * row[j] - k * eq[j];
  normalize(out);
  return out;
}

// Drop inequalities implied by the rest: h is redundant iff
// { others >= 0, equalities = 0, h <= -1 } is infeasible.
std::vector<Row> remove_redundant(std::vector<Row> ineqs, const std::vector<Row>& eqs, std::size_t active_cols) {
  auto to_constraint = [&](const Row& r, Relation rel, int rhs) {
    LinearConstraint c{std::vector<Rational>(active_cols), rel, rhs};
    for (std::size_t j = 0; j < active_cols; ++j) c.coeffs[j] = r[j];
    return c;
  };
  for (std::size_t i = 0; i < ineqs.size();) {
    std::vector<LinearConstraint> cs;
    for (std::size_t k = 0; k < ineqs.size(); ++k)
      if (k != i) cs.push_back(to_constraint(ineqs[k], Relation::GreaterEqual, 0));
    for (const auto& e : eqs) cs.push_back(to_constraint(e, Relation::Equal, 0));
    cs.push_back(to_constraint(ineqs[i], Relation::LessEqual, -1));
    if (!rational_feasible(active_cols, cs))
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return ineqs;
}

std::vector<Row> dedupe(std::vector<Row> rows) {
  std::set<Row> seen;
  std::vector<Row> out;
  for (auto& r : rows) {
    if (is_zero_row(r)) continue;
    if (seen.insert(r).second) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<IntVector> dual_facets(std::span<const IntVector> generators) {
  if (generators.empty()) throw InvalidArgument("cone needs at least one generator");
  const std::size_t n = generators.front().size(), r = generators.size();
  for (const auto& g : generators)
    if (g.size() != n) throw InvalidArgument("generators have mixed dimensions");
  if (rank_of(IntMatrix::from_rows({generators.begin(), generators.end()})) != n)
    throw InvalidArgument("generators do not span the ambient space");
  if (!is_strictly_convex(generators)) throw NotStrictlyConvexError("cone contains a line");

  // Columns 0..n-1 are x, n..n+r-1 are lambda.
  const std::size_t width = n + r;
  std::vector<Row> eqs, ineqs;
  for (std::size_t k = 0; k < n; ++k) {
    Row e(width, Integer(0));
    e[k] = 1;
    for (std::size_t i = 0; i < r; ++i) e[n + i] = -generators[i][k];
    eqs.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < r; ++i) {
    Row h(width, Integer(0));
    h[n + i] = 1;
    ineqs.push_back(std::move(h));
  }

  // Eliminate lambda columns from the last one down, so the surviving
  // variables always form a prefix and the LP only sees active columns.
  for (std::size_t step = 0; step < r; ++step) {
    const std::size_t col = width - 1 - step;
    std::size_t pick = eqs.size();
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (eqs[i][col] != 0) {
        pick = i;
        break;
      }
    if (pick < eqs.size()) {
      Row eq = eqs[pick];
      eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& e : eqs)
        if (e[col] != 0) e = eliminate_with_equality(e, eq, col);
      for (auto& h : ineqs)
        if (h[col] != 0) h = eliminate_with_equality(h, eq, col);
    } else {
      std::vector<Row> pos, neg, next;
      for (auto& h : ineqs) {
        if (h[col] > 0)
          pos.push_back(std::move(h));
        else if (h[col] < 0)
          neg.push_back(std::move(h));
        else
          next.push_back(std::move(h));
      }
      for (const auto& p : pos)
        for (const auto& q : neg) {
          Row combo(width);
          Integer a = p[col], b = -q[col];
          for (std::size_t j = 0; j < width; ++j) combo[j] = b * p[j] + a * q[j];
          normalize(combo);
          next.push_back(std::move(combo));
        }
      ineqs = std::move(next);
    }
    eqs = dedupe(std::move(eqs));
    ineqs = remove_redundant(dedupe(std::move(ineqs)), eqs, col);
  }
  if (!eqs.empty()) throw IntegrityError("facet elimination left an equality on a full-dimensional cone");

  std::vector<IntVector> facets;
  for (auto& h : ineqs) facets.emplace_back(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(n));
  facets = dedupe(std::move(facets));
  std::sort(facets.begin(), facets.end());
  return facets;
}

}  // namespace toricfold
