#pragma once

// Shared generators and brute-force oracles for the test suites.

#include <random>
#include <string>
#include <vector>

#include "toricfold/classify.hpp"

namespace testing_support {

using namespace toricfold;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> rs;
  for (auto r : rows) rs.push_back(iv(r));
  return IntMatrix::from_rows(rs);
}

// Arbitrary smooth complete fan: P2 or a Hirzebruch surface followed by
// non-equivariant blow-ups at random corners.
inline Fan2D random_fan(std::uint64_t seed, std::size_t max_rays = 12) {
  std::mt19937_64 rng(seed);
  Fan2D f = (rng() % 4 == 0) ? catalog("P2") : catalog("Hirzebruch(" + std::to_string(rng() % 5) + ")");
  const std::size_t target = 3 + rng() % (max_rays - 2);
  while (f.size() < target) f = blow_up(f, rng() % f.size());
  return f;
}

inline Mat2 random_unimodular(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat2 g = Mat2::identity();
  const Mat2 gens[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {1, -1, 0, 1}, {-1, 0, 0, 1}};
  for (int k = 0; k < 6; ++k) g = g * gens[rng() % 5];
  return g;
}

// Seeded foldable fan: bases Y2/Y3/Y4, up to four rounds, at most 30 rays.
inline Fan2D random_foldable(std::uint64_t seed) {
  static const char* bases[] = {"Y2", "Y3", "Y4"};
  RandomFanOptions o;
  o.seed = seed;
  o.base = bases[seed % 3];
  o.rounds = static_cast<int>((seed / 3) % 5);
  o.max_rays = 30;
  return random_foldable_fan(o);
}

// Every 2x2 integer matrix with entries in [-bound, bound] that is
// unimodular and permutes the rays.
inline std::vector<Mat2> brute_force_automorphisms(const Fan2D& f, std::int64_t bound) {
  std::vector<Mat2> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) {
          Mat2 g{a, b, c, d};
          if (!g.is_unimodular()) continue;
          bool ok = true;
          for (const auto& u : f.rays())
            if (!f.contains(g * u)) {
              ok = false;
              break;
            }
          if (ok) out.push_back(g);
        }
  return out;
}

// x in conv(0, gens) by Caratheodory: some linearly independent subset of
// the generators expresses x with nonnegative coefficients summing to <= 1.
inline bool caratheodory_member(const std::vector<IntVector>& gens, const IntVector& x) {
  const std::size_t n = x.size(), r = gens.size();
  bool zero = true;
  for (const auto& c : x) zero = zero && c == 0;
  if (zero) return true;
  std::vector<std::size_t> pick;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (found) return;
    if (!pick.empty()) {
      std::vector<IntVector> cols;
      for (auto i : pick) cols.push_back(gens[i]);
      IntMatrix m = IntMatrix::from_columns(cols, n);
      if (rank_of(m) == pick.size()) {
        if (auto sol = solve_rational(m, x)) {
          Rational total = 0;
          bool nonneg = true;
          for (const auto& l : *sol) {
            if (l < 0) nonneg = false;
            total += l;
          }
          if (nonneg && total <= 1) found = true;
        }
      } else {
        return;
      }
    }
    if (pick.size() == n) return;
    for (std::size_t i = start; i < r; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

// Lattice points of conv(0, gens) other than 0 and the given vertices, by
// scanning the bounding box with the Caratheodory test.
inline std::vector<IntVector> brute_force_offenders(const std::vector<IntVector>& gens,
                                                    const std::vector<IntVector>& vertices) {
  const std::size_t n = gens.front().size();
  IntVector lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& g : gens)
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k] < lo[k]) lo[k] = g[k];
      if (g[k] > hi[k]) hi[k] = g[k];
    }
  std::vector<IntVector> out;
  IntVector x = lo;
  for (;;) {
    bool zero = true;
    for (const auto& c : x) zero = zero && c == 0;
    bool vertex = std::find(vertices.begin(), vertices.end(), x) != vertices.end();
    if (!zero && !vertex && caratheodory_member(gens, x)) out.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) x[k] = lo[k], ++k;
    if (k == n) break;
    x[k] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing_support
