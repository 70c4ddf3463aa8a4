#include "toricfold/deformation.hpp"

#include <algorithm>
#include <map>

#include "toricfold/intlat.hpp"

namespace toricfold {

namespace {

using C = Checked64;

// Some m with <m, u> = target, for primitive u (extended Euclid).
Vec2 solve_pairing(const Vec2& u, std::int64_t target) {
  C old_r = u[0], r = u[1], old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != C(0)) {
    C q = old_r / r;
    C tmp = old_r - q * r;
    old_r = r, r = tmp;
    tmp = old_s - q * s;
    old_s = s, s = tmp;
    tmp = old_t - q * t;
    old_t = t, t = tmp;
  }
  // old_s * u0 + old_t * u1 = old_r = +-1
  C sign = old_r < C(0) ? C(-1) : C(1);
  return {(old_s * sign * C(target)).value(), (old_t * sign * C(target)).value()};
}

struct Range {
  std::int64_t lo, hi;
  bool empty() const { return lo > hi; }
};

// Restrict k so that c + k * slope <= bound.
void clip(Range& r, std::int64_t c, std::int64_t slope, std::int64_t bound) {
  C rhs = C(bound) - C(c);
  if (slope == 0) {
    if (rhs < C(0)) r = {1, 0};
    return;
  }
  if (slope > 0) {
    r.hi = std::min(r.hi, floor_div<C>(rhs, slope).value());
  } else {
    // dividing by a negative slope flips the inequality: k >= ceil(rhs / slope)
    r.lo = std::max(r.lo, (-floor_div<C>(-rhs, slope)).value());
  }
}

// Lattice points m = m0 + k * perp(u) with <m, u> = target and
// <m, v> <= bound(v) for every listed (v, bound).
std::vector<Vec2> line_segment(const Vec2& u, std::int64_t target,
                               const std::vector<std::pair<Vec2, std::int64_t>>& constraints) {
  const Vec2 m0 = solve_pairing(u, target);
  const Vec2 dir{-u[1], u[0]};
  Range r{INT64_MIN, INT64_MAX};
  for (const auto& [v, bound] : constraints) {
    clip(r, dot2(m0, v), dot2(dir, v), bound);
    if (r.empty()) return {};
  }
  if (r.lo == INT64_MIN || r.hi == INT64_MAX) throw IntegrityError("unbounded character segment on a complete fan");
  std::vector<Vec2> out;
  for (std::int64_t k = r.lo; k <= r.hi; ++k)
    out.push_back({(C(m0[0]) + C(k) * C(dir[0])).value(), (C(m0[1]) + C(k) * C(dir[1])).value()});
  return out;
}

}  // namespace

DemazureRoots demazure_roots(const Fan2D& f) {
  DemazureRoots out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<std::pair<Vec2, std::int64_t>> cs;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != i) cs.push_back({f.rays()[j], 0});
    auto seg = line_segment(f.rays()[i], 1, cs);
    out.roots.insert(out.roots.end(), seg.begin(), seg.end());
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.aut0_dim = 2 + static_cast<std::int64_t>(out.roots.size());
  return out;
}

bool aut0_is_torus(const Fan2D& f) { return demazure_roots(f).roots.empty(); }

WeightDecomposition WeightDecomposition::from_entries(std::vector<WeightEntry> entries) {
  std::map<Vec2, std::int64_t> merged;
  for (const auto& e : entries) {
    if (e.multiplicity < 0) throw InvalidArgument("negative weight multiplicity");
    merged[e.weight] += e.multiplicity;
  }
  WeightDecomposition w;
  for (const auto& [m, k] : merged) {
    if (k == 0) continue;
    w.offsets_.push_back(static_cast<std::size_t>(w.total_));
    w.entries_.push_back({m, k});
    w.total_ += k;
  }
  return w;
}

std::int64_t WeightDecomposition::multiplicity(const Vec2& m) const {
  auto k = index_of(m);
  return k ? entries_[*k].multiplicity : 0;
}

std::optional<std::size_t> WeightDecomposition::index_of(const Vec2& m) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), m,
                             [](const WeightEntry& e, const Vec2& x) { return e.weight < x; });
  if (it == entries_.end() || it->weight != m) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

std::vector<Vec2> WeightDecomposition::expanded() const {
  std::vector<Vec2> out;
  for (const auto& e : entries_)
    for (std::int64_t c = 0; c < e.multiplicity; ++c) out.push_back(e.weight);
  return out;
}

Vec2 WeightDecomposition::weight_sum() const {
  C x = 0, y = 0;
  for (const auto& e : entries_) {
    x += C(e.weight[0]) * C(e.multiplicity);
    y += C(e.weight[1]) * C(e.multiplicity);
  }
  return {x.value(), y.value()};
}

std::int64_t weight_multiplicity(const Fan2D& f, const Vec2& m) {
  std::int64_t count = 0;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(f.size()); ++i)
    if (dot2(m, f.ray(i)) == -1 && dot2(m, f.ray(i - 1)) < 0 && dot2(m, f.ray(i + 1)) < 0) ++count;
  return count;
}

WeightDecomposition weight_decomposition(const Fan2D& f) {
  std::vector<WeightEntry> found;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(f.size()); ++i) {
    // When the neighbours are opposite the two strict inequalities contradict
    // each other and the segment comes back empty.
    auto seg = line_segment(f.ray(i), -1, {{f.ray(i - 1), -1}, {f.ray(i + 1), -1}});
    for (const auto& m : seg) found.push_back({m, 1});
  }
  return WeightDecomposition::from_entries(std::move(found));
}

std::int64_t oracle_dimension(const Fan2D& f) {
  std::int64_t d = 0;
  for (auto a : self_intersections(f)) d += std::max<std::int64_t>(0, -a - 1);
  return d;
}

}  // namespace toricfold
