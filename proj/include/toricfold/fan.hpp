#pragma once

// Smooth complete fans in the plane: validation, blow-ups and blow-downs,
// self-intersection numbers, isomorphism search, and the named catalog.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toricfold/error.hpp"

namespace toricfold {

using Vec2 = std::array<std::int64_t, 2>;

// Row-major 2x2 integer matrix [[a, b], [c, d]]; ordering is lexicographic
// on (a, b, c, d).
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 from_columns(const Vec2& c0, const Vec2& c1) { return {c0[0], c1[0], c0[1], c1[1]}; }

  std::int64_t det() const;
  bool is_unimodular() const;
  // Exact inverse; throws InvalidArgument unless the matrix is unimodular.
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Vec2 operator*(const Mat2& m, const Vec2& v);
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Vec2& v);

// Overflow-checked helpers on 64-bit vectors.
std::int64_t det2(const Vec2& u, const Vec2& v);
std::int64_t dot2(const Vec2& m, const Vec2& u);
Vec2 add2(const Vec2& u, const Vec2& v);
Vec2 neg2(const Vec2& u);
// Row vector m times matrix g, i.e. the covector m o g.
Vec2 covector_times(const Vec2& m, const Mat2& g);
bool is_primitive(const Vec2& v);

// Exact counterclockwise angular order starting at the positive x-axis.
bool angle_less(const Vec2& u, const Vec2& v);

enum class FanDefect { TooFewRays, ZeroRay, NotPrimitive, Duplicate, NotSmooth };
std::string to_string(FanDefect d);

class FanError : public Error {
 public:
  FanError(FanDefect defect, std::vector<Vec2> rays, const std::string& detail);
  FanDefect defect;
  std::vector<Vec2> offending;
};

class Fan2D {
 public:
  // Sorts counterclockwise, starts at the lexicographically least ray and
  // checks primitivity, distinctness and det(u_i, u_{i+1}) = 1 cyclically.
  // Sorted order plus positive adjacent determinants is exactly one turn
  // around the origin, so this also certifies completeness.
  static Fan2D validate(std::vector<Vec2> rays, std::string name = {});

  const std::vector<Vec2>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  // Cyclic indexing; negative offsets are allowed.
  const Vec2& ray(std::ptrdiff_t i) const;
  const std::string& name() const { return name_; }
  Fan2D with_name(std::string name) const;

  std::optional<std::size_t> index_of(const Vec2& v) const;
  bool contains(const Vec2& v) const { return index_of(v).has_value(); }

  friend bool operator==(const Fan2D& x, const Fan2D& y) { return x.rays_ == y.rays_; }

 private:
  std::vector<Vec2> rays_;
  std::string name_;
};

// Inserts u_i + u_{i+1}. The result is re-canonicalized, so use index_of to
// locate the new ray.
Fan2D blow_up(const Fan2D& f, std::size_t corner);

class NotContractibleError : public Error {
 public:
  using Error::Error;
};
// Removes ray i; requires u_i = u_{i-1} + u_{i+1}.
Fan2D blow_down(const Fan2D& f, std::size_t ray);

// a_i with u_{i-1} + u_{i+1} = -a_i u_i.
std::vector<std::int64_t> self_intersections(const Fan2D& f);

Fan2D change_basis(const Fan2D& f, const Mat2& g);

// Every g in GL2(Z) with g * rays(f1) = rays(f2) as sets, sorted.
std::vector<Mat2> all_isomorphisms(const Fan2D& f1, const Fan2D& f2);
std::optional<Mat2> fans_isomorphic(const Fan2D& f1, const Fan2D& f2);

class UnknownCatalogName : public Error {
 public:
  using Error::Error;
};
Fan2D catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace toricfold
