#pragma once

// Exact integer and rational linear algebra: matrices over Z, Smith and
// Hermite normal forms, saturation and quotient lattices, rational
// feasibility, and facet descriptions of rational cones.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricfold/error.hpp"

namespace toricfold {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

std::string to_string(const Integer& x);

// 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("addition");
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("subtraction");
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("multiplication");
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw InvalidArgument("division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) overflow("division");
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw InvalidArgument("division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }

  friend constexpr bool operator==(Checked64, Checked64) = default;
  friend constexpr auto operator<=>(Checked64, Checked64) = default;

  friend std::ostream& operator<<(std::ostream& os, Checked64 x) { return os << x.v_; }

 private:
  [[noreturn]] static void overflow(const char* what) {
    throw OverflowError(std::string("64-bit overflow in ") + what);
  }
  std::int64_t v_ = 0;
};

template <class T>
T magnitude(const T& x) {
  return x < T(0) ? T(-x) : x;
}

// Quotient rounded toward negative infinity; b must be nonzero.
template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  T r = a % b;
  if (r != T(0) && ((r < T(0)) != (b < T(0)))) q -= T(1);
  return q;
}

template <class T>
T gcd_of(T a, T b) {
  a = magnitude(a);
  b = magnitude(b);
  while (b != T(0)) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  // Rows must all have the same length; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows = 0) {
    return from_rows(cols, rows).transposed();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row dst += k * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  // col dst += k * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in product");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// U * M * V = S with U, V unimodular and S diagonal, nonnegative, s1 | s2 | ...
template <class T>
struct SmithForm {
  Matrix<T> U;
  Matrix<T> S;
  Matrix<T> V;

  std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
      if (S(i, i) != T(0)) ++r;
    return r;
  }
  std::vector<T> invariant_factors() const {
    std::vector<T> out;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
      if (S(i, i) != T(0)) out.push_back(S(i, i));
    return out;
  }
};

namespace detail {

// Smallest nonzero |entry| of S[t:, t:], ties broken by lowest row-major index.
template <class T>
bool find_pivot(const Matrix<T>& S, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  T best(0);
  for (std::size_t i = t; i < S.rows(); ++i)
    for (std::size_t j = t; j < S.cols(); ++j) {
      if (S(i, j) == T(0)) continue;
      T a = magnitude(S(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace detail

template <class T>
SmithForm<T> smith_normal_form(const Matrix<T>& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  SmithForm<T> f{Matrix<T>::identity(nr), m, Matrix<T>::identity(nc)};
  Matrix<T>& S = f.S;
  auto swap_r = [&](std::size_t a, std::size_t b) { S.swap_rows(a, b), f.U.swap_rows(a, b); };
  auto swap_c = [&](std::size_t a, std::size_t b) { S.swap_cols(a, b), f.V.swap_cols(a, b); };
  auto add_r = [&](std::size_t d, std::size_t s, const T& k) {
    S.add_row_multiple(d, s, k), f.U.add_row_multiple(d, s, k);
  };
  auto add_c = [&](std::size_t d, std::size_t s, const T& k) {
    S.add_col_multiple(d, s, k), f.V.add_col_multiple(d, s, k);
  };

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    std::size_t pr = t, pc = t;
    if (!detail::find_pivot(S, t, pr, pc)) break;
    swap_r(t, pr);
    swap_c(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (S(i, t) == T(0)) continue;
        add_r(i, t, T(-(S(i, t) / S(t, t))));
        if (S(i, t) != T(0)) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (S(t, j) == T(0)) continue;
        add_c(j, t, T(-(S(t, j) / S(t, t))));
        if (S(t, j) != T(0)) clean = false;
      }
      if (!clean) {
        // Remainders are strictly smaller than the pivot; promote the smallest.
        std::size_t br = t, bc = t;
        T best = magnitude(S(t, t));
        for (std::size_t i = t + 1; i < nr; ++i)
          if (S(i, t) != T(0) && magnitude(S(i, t)) < best) best = magnitude(S(i, t)), br = i, bc = t;
        for (std::size_t j = t + 1; j < nc; ++j)
          if (S(t, j) != T(0) && magnitude(S(t, j)) < best) best = magnitude(S(t, j)), br = t, bc = j;
        swap_r(t, br);
        swap_c(t, bc);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (S(i, j) % S(t, t) != T(0)) {
            add_r(t, i, T(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < T(0)) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// Row-style Hermite normal form H = P * M: echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows end up at the bottom.
template <class T>
Matrix<T> hermite_normal_form(const Matrix<T>& m, Matrix<T>* transform = nullptr) {
  Matrix<T> H = m;
  Matrix<T> P = Matrix<T>::identity(m.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    for (;;) {
      std::size_t best = H.rows();
      for (std::size_t i = row; i < H.rows(); ++i)
        if (H(i, col) != T(0) && (best == H.rows() || magnitude(H(i, col)) < magnitude(H(best, col))))
          best = i;
      if (best == H.rows()) break;
      H.swap_rows(row, best);
      P.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < H.rows(); ++i) {
        if (H(i, col) == T(0)) continue;
        T q = -(H(i, col) / H(row, col));
        H.add_row_multiple(i, row, q);
        P.add_row_multiple(i, row, q);
        if (H(i, col) != T(0)) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == T(0)) continue;
    if (H(row, col) < T(0)) {
      H.negate_row(row);
      P.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      T q = -floor_div(H(i, col), H(row, col));
      if (q == T(0)) continue;
      H.add_row_multiple(i, row, q);
      P.add_row_multiple(i, row, q);
    }
    ++row;
  }
  if (transform) *transform = std::move(P);
  return H;
}

class RankDeficientError : public Error {
 public:
  RankDeficientError(std::size_t rank, std::size_t cols);
  std::size_t rank;
};

class NotInjectiveError : public Error {
 public:
  NotInjectiveError(std::size_t rank, std::size_t cols);
  std::size_t rank;
};

class NotSaturatedError : public Error {
 public:
  explicit NotSaturatedError(std::vector<Integer> factors);
  std::vector<Integer> invariant_factors;
};

class NotStrictlyConvexError : public Error {
 public:
  using Error::Error;
};

std::size_t rank_of(const IntMatrix& m);

// |det| == 1 for a square matrix; checked through the Smith form.
bool is_unimodular(const IntMatrix& m);

// true iff Z^rows / image(b) is torsion-free. Throws RankDeficientError when
// b does not have full column rank.
bool is_saturated(const IntMatrix& b);

// 0 -> Z^k --b--> Z^d --A--> Z^(d-k) -> 0 with A * b = 0 and A * section = I.
struct LatticeQuotient {
  IntMatrix A;
  IntMatrix section;
};

// A is taken from the Smith transform of b and then put in Hermite normal
// form, so the basis of the quotient lattice does not depend on pivoting.
LatticeQuotient quotient_lattice(const IntMatrix& b);
IntMatrix quotient_map(const IntMatrix& b);

// Primitive integer vector on the same ray; the zero vector is returned as is.
IntVector primitive_part(const IntVector& v);
Integer content(const IntVector& v);

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, const IntVector& rhs);
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& rhs);

// A point of Q^n written as numerators over one positive denominator in
// lowest terms.
struct RationalPoint {
  IntVector numerators;
  Integer denominator = 1;

  static RationalPoint from(const std::vector<Rational>& coords);
  std::vector<Rational> coordinates() const;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

enum class Relation { LessEqual, GreaterEqual, Equal };

// coeffs . x  (<= | >= | =)  rhs
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::GreaterEqual;
  Rational rhs = 0;
};

// Exact feasibility of a finite system over Q^dim; returns a witness when
// feasible. All variables are free.
std::optional<RationalPoint> rational_feasible(std::size_t dim, std::span<const LinearConstraint> constraints);

// Maximizes objective . x over the system. Returns nullopt when infeasible;
// `unbounded` is set when the objective has no upper bound.
struct LpResult {
  bool feasible = false;
  bool unbounded = false;
  Rational value;
  RationalPoint point;
};
LpResult rational_maximize(std::size_t dim, std::span<const LinearConstraint> constraints,
                           const std::vector<Rational>& objective);

// x in cone(generators)?
bool in_cone(std::span<const IntVector> generators, const IntVector& x);

// -C intersected with C is {0} for C = cone(generators).
bool is_strictly_convex(std::span<const IntVector> generators);

// Facet normals of a full-dimensional strictly convex cone, by
// Fourier-Motzkin elimination with exact-LP redundancy removal. The result is
// primitive, deduplicated and sorted: cone = {x : <f, x> >= 0 for all f}.
std::vector<IntVector> dual_facets(std::span<const IntVector> generators);

}  // namespace toricfold
