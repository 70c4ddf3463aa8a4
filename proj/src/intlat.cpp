#include "toricfold/intlat.hpp"

#include <sstream>

namespace toricfold {

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

std::string join(const std::vector<Integer>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

// Inverse of a unimodular matrix: its Hermite form is the identity, so the
// accumulated transform is the inverse.
IntMatrix unimodular_inverse(const IntMatrix& u) {
  IntMatrix p;
  IntMatrix h = hermite_normal_form(u, &p);
  if (!(h == IntMatrix::identity(u.rows()))) throw IntegrityError("matrix is not unimodular");
  return p;
}

}  // namespace

RankDeficientError::RankDeficientError(std::size_t r, std::size_t cols)
    : Error("matrix has rank " + std::to_string(r) + " but " + std::to_string(cols) + " columns"),
      rank(r) {}

NotInjectiveError::NotInjectiveError(std::size_t r, std::size_t cols)
    : Error("map is not injective: rank " + std::to_string(r) + " < " + std::to_string(cols)), rank(r) {}

NotSaturatedError::NotSaturatedError(std::vector<Integer> factors)
    : Error("image is not saturated; invariant factors [" + join(factors) + "]"),
      invariant_factors(std::move(factors)) {}

std::size_t rank_of(const IntMatrix& m) { return smith_normal_form(m).rank(); }

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  auto f = smith_normal_form(m);
  if (f.rank() != m.rows()) return false;
  for (const auto& s : f.invariant_factors())
    if (s != 1) return false;
  return true;
}

bool is_saturated(const IntMatrix& b) {
  auto f = smith_normal_form(b);
  if (f.rank() < b.cols()) throw RankDeficientError(f.rank(), b.cols());
  for (const auto& s : f.invariant_factors())
    if (s != 1) return false;
  return true;
}

LatticeQuotient quotient_lattice(const IntMatrix& b) {
  const std::size_t d = b.rows(), k = b.cols();
  auto f = smith_normal_form(b);
  if (f.rank() < k) throw NotInjectiveError(f.rank(), k);
  auto factors = f.invariant_factors();
  for (const auto& s : factors)
    if (s != 1) throw NotSaturatedError(factors);

  // Rows k.. of U kill the image of b; the matching columns of U^-1 split them.
  IntMatrix a0 = f.U.block(k, d - k, 0, d);
  IntMatrix s0 = unimodular_inverse(f.U).block(0, d, k, d - k);
  IntMatrix p;
  IntMatrix a = hermite_normal_form(a0, &p);
  IntMatrix section = s0 * unimodular_inverse(p);
  return {std::move(a), std::move(section)};
}

IntMatrix quotient_map(const IntMatrix& b) { return quotient_lattice(b).A; }

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd_of<Integer>(g, x);
  return g;
}

IntVector primitive_part(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, const IntVector& rhs) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (rhs.size() != nr) throw InvalidArgument("right-hand side has wrong length");
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc + 1));
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = m(i, j);
    a[i][nc] = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t p = row;
    while (p < nr && a[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational k = a[i][col];
      for (std::size_t j = col; j <= nc; ++j) a[i][j] -= k * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < nr; ++i)
    if (a[i][nc] != 0) return std::nullopt;
  std::vector<Rational> x(nc, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][nc];
  return x;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& rhs) {
  if (rhs.size() != m.rows()) throw InvalidArgument("right-hand side has wrong length");
  auto f = smith_normal_form(m);
  IntVector ub = f.U * rhs;
  const std::size_t r = f.rank();
  IntVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (ub[i] % f.S(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / f.S(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V * y;
}

RationalPoint RationalPoint::from(const std::vector<Rational>& coords) {
  Integer den = 1;
  for (const auto& q : coords) den = lcm(den, Integer(q.get_den()));
  RationalPoint p;
  p.denominator = den;
  for (const auto& q : coords) p.numerators.push_back(Integer(q.get_num() * (den / q.get_den())));
  return p;
}

std::vector<Rational> RationalPoint::coordinates() const {
  std::vector<Rational> out;
  for (const auto& n : numerators) {
    Rational q(n, denominator);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace toricfold
