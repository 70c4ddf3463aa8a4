#include "toricfold/fan.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "toricfold/intlat.hpp"

namespace toricfold {

namespace {

using C = Checked64;

std::int64_t v(C x) { return x.value(); }

}  // namespace

std::int64_t Mat2::det() const { return v(C(a) * C(d) - C(b) * C(c)); }

bool Mat2::is_unimodular() const {
  auto dt = det();
  return dt == 1 || dt == -1;
}

Mat2 Mat2::inverse() const {
  auto dt = det();
  if (dt != 1 && dt != -1) throw InvalidArgument("matrix is not unimodular");
  // adj / det, and 1/det = det for det = +-1
  return {v(C(d) * C(dt)), v(-C(b) * C(dt)), v(-C(c) * C(dt)), v(C(a) * C(dt))};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {v(C(x.a) * C(y.a) + C(x.b) * C(y.c)), v(C(x.a) * C(y.b) + C(x.b) * C(y.d)),
          v(C(x.c) * C(y.a) + C(x.d) * C(y.c)), v(C(x.c) * C(y.b) + C(x.d) * C(y.d))};
}

Vec2 operator*(const Mat2& m, const Vec2& u) {
  return {v(C(m.a) * C(u[0]) + C(m.b) * C(u[1])), v(C(m.c) * C(u[0]) + C(m.d) * C(u[1]))};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

std::ostream& operator<<(std::ostream& os, const Vec2& u) { return os << '(' << u[0] << ", " << u[1] << ')'; }

std::int64_t det2(const Vec2& u, const Vec2& w) { return v(C(u[0]) * C(w[1]) - C(u[1]) * C(w[0])); }
std::int64_t dot2(const Vec2& m, const Vec2& u) { return v(C(m[0]) * C(u[0]) + C(m[1]) * C(u[1])); }
Vec2 add2(const Vec2& u, const Vec2& w) { return {v(C(u[0]) + C(w[0])), v(C(u[1]) + C(w[1]))}; }
Vec2 neg2(const Vec2& u) { return {v(-C(u[0])), v(-C(u[1]))}; }

Vec2 covector_times(const Vec2& m, const Mat2& g) {
  return {v(C(m[0]) * C(g.a) + C(m[1]) * C(g.c)), v(C(m[0]) * C(g.b) + C(m[1]) * C(g.d))};
}

bool is_primitive(const Vec2& u) { return gcd_of<C>(u[0], u[1]) == C(1); }

bool angle_less(const Vec2& u, const Vec2& w) {
  auto half = [](const Vec2& x) { return (x[1] < 0 || (x[1] == 0 && x[0] < 0)) ? 1 : 0; };
  int hu = half(u), hw = half(w);
  if (hu != hw) return hu < hw;
  return det2(u, w) > 0;
}

std::string to_string(FanDefect d) {
  switch (d) {
    case FanDefect::TooFewRays: return "too_few_rays";
    case FanDefect::ZeroRay: return "zero_ray";
    case FanDefect::NotPrimitive: return "not_primitive";
    case FanDefect::Duplicate: return "duplicate_ray";
    case FanDefect::NotSmooth: return "not_smooth";
  }
  return "unknown";
}

FanError::FanError(FanDefect d, std::vector<Vec2> rays, const std::string& detail)
    : Error(to_string(d) + ": " + detail), defect(d), offending(std::move(rays)) {}

Fan2D Fan2D::validate(std::vector<Vec2> rays, std::string name) {
  if (rays.size() < 3)
    throw FanError(FanDefect::TooFewRays, rays, "a complete fan needs at least 3 rays, got " + std::to_string(rays.size()));
  for (const auto& u : rays)
    if (u[0] == 0 && u[1] == 0) throw FanError(FanDefect::ZeroRay, {u}, "zero vector is not a ray generator");
  for (const auto& u : rays)
    if (!is_primitive(u)) {
      std::ostringstream os;
      os << u << " is not primitive";
      throw FanError(FanDefect::NotPrimitive, {u}, os.str());
    }
  std::set<Vec2> seen;
  for (const auto& u : rays)
    if (!seen.insert(u).second) {
      std::ostringstream os;
      os << u << " appears twice";
      throw FanError(FanDefect::Duplicate, {u}, os.str());
    }

  std::sort(rays.begin(), rays.end(), angle_less);
  auto first = std::min_element(rays.begin(), rays.end());
  std::rotate(rays.begin(), first, rays.end());

  const std::size_t n = rays.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& u = rays[i];
    const Vec2& w = rays[(i + 1) % n];
    auto dt = det2(u, w);
    if (dt != 1) {
      std::ostringstream os;
      os << "det" << u << w << " = " << dt << ", expected 1";
      throw FanError(FanDefect::NotSmooth, {u, w}, os.str());
    }
  }
  Fan2D f;
  f.rays_ = std::move(rays);
  f.name_ = std::move(name);
  return f;
}

const Vec2& Fan2D::ray(std::ptrdiff_t i) const {
  auto n = static_cast<std::ptrdiff_t>(rays_.size());
  return rays_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Fan2D Fan2D::with_name(std::string name) const {
  Fan2D f = *this;
  f.name_ = std::move(name);
  return f;
}

std::optional<std::size_t> Fan2D::index_of(const Vec2& u) const {
  auto it = std::find(rays_.begin(), rays_.end(), u);
  if (it == rays_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

Fan2D blow_up(const Fan2D& f, std::size_t corner) {
  if (corner >= f.size()) throw InvalidArgument("corner index out of range");
  auto rays = f.rays();
  auto i = static_cast<std::ptrdiff_t>(corner);
  rays.push_back(add2(f.ray(i), f.ray(i + 1)));
  return Fan2D::validate(std::move(rays));
}

Fan2D blow_down(const Fan2D& f, std::size_t idx) {
  if (idx >= f.size()) throw InvalidArgument("ray index out of range");
  auto i = static_cast<std::ptrdiff_t>(idx);
  if (f.size() <= 3 || add2(f.ray(i - 1), f.ray(i + 1)) != f.ray(i)) {
    std::ostringstream os;
    os << "ray " << f.ray(i) << " is not the sum of its neighbours " << f.ray(i - 1) << " and " << f.ray(i + 1);
    throw NotContractibleError(os.str());
  }
  auto rays = f.rays();
  rays.erase(rays.begin() + i);
  return Fan2D::validate(std::move(rays));
}

std::vector<std::int64_t> self_intersections(const Fan2D& f) {
  std::vector<std::int64_t> out;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(f.size()); ++i) {
    const Vec2& u = f.ray(i);
    Vec2 s = add2(f.ray(i - 1), f.ray(i + 1));
    // s is parallel to u; read off the factor from a nonzero coordinate.
    std::int64_t a = u[0] != 0 ? -(s[0] / u[0]) : -(s[1] / u[1]);
    if (s != Vec2{v(-C(a) * C(u[0])), v(-C(a) * C(u[1]))})
      throw IntegrityError("neighbour sum is not a multiple of the ray in a smooth fan");
    out.push_back(a);
  }
  return out;
}

Fan2D change_basis(const Fan2D& f, const Mat2& g) {
  if (!g.is_unimodular()) throw InvalidArgument("change of basis must be unimodular");
  std::vector<Vec2> rays;
  for (const auto& u : f.rays()) rays.push_back(g * u);
  return Fan2D::validate(std::move(rays), f.name());
}

std::vector<Mat2> all_isomorphisms(const Fan2D& f1, const Fan2D& f2) {
  std::vector<Mat2> out;
  if (f1.size() != f2.size()) return out;
  // [u0 u1] has determinant 1, so every candidate is integral.
  const Mat2 base_inv = Mat2::from_columns(f1.ray(0), f1.ray(1)).inverse();
  std::set<Vec2> target(f2.rays().begin(), f2.rays().end());
  std::set<Mat2> found;
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(f2.size()); ++j) {
    const Vec2 &p = f2.ray(j), &q = f2.ray(j + 1);
    for (const auto& g : {Mat2::from_columns(p, q) * base_inv, Mat2::from_columns(q, p) * base_inv}) {
      if (!g.is_unimodular()) continue;
      bool ok = true;
      for (const auto& u : f1.rays())
        if (!target.count(g * u)) {
          ok = false;
          break;
        }
      if (ok) found.insert(g);
    }
  }
  return {found.begin(), found.end()};
}

std::optional<Mat2> fans_isomorphic(const Fan2D& f1, const Fan2D& f2) {
  auto all = all_isomorphisms(f1, f2);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

const std::map<std::string, std::vector<Vec2>>& fixed_catalog() {
  static const std::map<std::string, std::vector<Vec2>> table = {
      {"P2", {{1, 0}, {0, 1}, {-1, -1}}},
      {"P1xP1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
      // plane blown up at its three torus-fixed points
      {"Bl3P2", {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}},
      // C1 member: one-point blow-up of Hirzebruch(2)
      {"Sigma1", {{0, 1}, {1, 0}, {-1, -2}, {0, -1}, {-1, -3}}},
      // C2 member
      {"Sigma2", {{0, 1}, {1, 0}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}, {3, 2}, {-3, -2}}},
      // C3 member
      {"Sigma3",
       {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {-1, 0}, {-1, 1}, {-1, 2}, {-2, -3}, {-1, -2}, {-1, -1}, {0, -1}}},
      // C4 member
      {"Sigma4",
       {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {-1, 0}, {-1, 1}, {-1, 2}, {-2, -1}, {-1, -1}, {0, -1}, {1, -1}, {1, -2}}},
      // C6 member
      {"Sigma6", {{0, 1},  {1, 0},  {-1, 0},  {0, -1},  {1, 1},   {-1, -1}, {2, 1},   {3, 1},  {1, 2},
                  {2, 3},  {-1, 2}, {-1, 1},  {-2, -1}, {-3, -1}, {-1, -2}, {-2, -3}, {1, -1}, {1, -2}}},
      {"Y2", {{0, 1}, {1, 0}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}}},
      {"Y3", {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {-1, 0}, {-1, 1}, {-1, -2}, {-1, -1}, {0, -1}}},
      {"Y4", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}},
      // Y4 blown up at the corner spanned by (0,1) and (1,1)
      {"NonGorensteinX", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}, {1, 2}}},
  };
  return table;
}

// Dihedral-type fans are the symmetric members of the same families.
const std::map<std::string, std::string>& primed_aliases() {
  static const std::map<std::string, std::string> table = {
      {"Sigma1'", "Hirzebruch(2)"}, {"Sigma2'", "Y2"}, {"Sigma3'", "P2"}, {"Sigma4'", "P1xP1"}, {"Sigma6'", "Bl3P2"},
  };
  return table;
}

Fan2D hirzebruch(std::int64_t n) {
  return Fan2D::validate({{0, -1}, {1, 0}, {0, 1}, {-1, v(-C(n))}}, "Hirzebruch(" + std::to_string(n) + ")");
}

}  // namespace

Fan2D catalog(const std::string& name) {
  const std::string prefix = "Hirzebruch(";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
    std::int64_t n = 0;
    const char* b = name.data() + prefix.size();
    const char* e = name.data() + name.size() - 1;
    auto [ptr, ec] = std::from_chars(b, e, n);
    if (ec == std::errc() && ptr == e) return hirzebruch(n);
    throw UnknownCatalogName("bad Hirzebruch parameter in '" + name + "'");
  }
  if (auto it = primed_aliases().find(name); it != primed_aliases().end())
    return catalog(it->second).with_name(name);
  auto it = fixed_catalog().find(name);
  if (it == fixed_catalog().end()) throw UnknownCatalogName("unknown catalog fan '" + name + "'");
  return Fan2D::validate(it->second, name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [k, _] : fixed_catalog()) out.push_back(k);
  for (const auto& [k, _] : primed_aliases()) out.push_back(k);
  for (int n = 0; n <= 4; ++n) out.push_back("Hirzebruch(" + std::to_string(n) + ")");
  return out;
}

}  // namespace toricfold
