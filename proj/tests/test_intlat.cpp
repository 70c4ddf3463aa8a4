#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace toricfold;
using testing_support::im;
using testing_support::iv;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<long> pick(-bound, bound);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = pick(rng);
  return m;
}

// Cofactor expansion; only for the tiny matrices used here.
Integer det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * det(minor);
    s += (j % 2 == 0) ? term : Integer(-term);
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

// Invariant factors from gcds of k x k minors.
std::vector<Integer> determinantal_factors(const IntMatrix& m) {
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = gcd_of(g, det(sub));
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

// Facets of a full-dimensional cone by trying every (n-1)-subset of
// generators: the normal is the kernel of the subset, kept when it has a
// constant sign on all generators.
std::vector<IntVector> brute_force_facets(const std::vector<IntVector>& gens) {
  const std::size_t n = gens.front().size();
  std::set<IntVector> out;
  for (const auto& s : subsets(gens.size(), n - 1)) {
    std::vector<IntVector> rows;
    for (auto i : s) rows.push_back(gens[i]);
    IntMatrix m = IntMatrix::from_rows(rows);
    if (rank_of(m) != n - 1) continue;
    // kernel vector from the Smith transform: the last column of V
    auto f = smith_normal_form(m);
    IntVector normal = f.V.column(n - 1);
    int sign = 0;
    bool ok = true;
    for (const auto& g : gens) {
      Integer v = 0;
      for (std::size_t k = 0; k < n; ++k) v += normal[k] * g[k];
      int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (sg == 0) continue;
      if (sign == 0) sign = sg;
      if (sg != sign) ok = false;
    }
    if (!ok || sign == 0) continue;
    if (sign < 0)
      for (auto& x : normal) x = -x;
    out.insert(primitive_part(normal));
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_SUITE("intlat") {
  TEST_CASE("smith form matches determinantal divisors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      IntMatrix m = random_matrix(rng, r, c, 4);
      auto f = smith_normal_form(m);
      CHECK(f.U * m * f.V == f.S);
      CHECK(is_unimodular(f.U));
      CHECK(is_unimodular(f.V));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j) CHECK(f.S(i, j) == 0);
      auto inv = f.invariant_factors();
      for (std::size_t k = 1; k < inv.size(); ++k) CHECK(inv[k] % inv[k - 1] == 0);
      CHECK(inv == determinantal_factors(m));
    }
  }

  TEST_CASE("smith form over checked 64-bit integers agrees with GMP") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      IntMatrix m = random_matrix(rng, 3, 3, 9);
      Matrix<Checked64> c(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) c(i, j) = m(i, j).get_si();
      auto a = smith_normal_form(m).invariant_factors();
      auto b = smith_normal_form(c).invariant_factors();
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k].value());
    }
  }

  TEST_CASE("checked arithmetic reports overflow") {
    Checked64 big = INT64_MAX;
    CHECK_THROWS_AS(big + Checked64(1), OverflowError);
    CHECK_THROWS_AS(big * Checked64(2), OverflowError);
    CHECK(floor_div<Checked64>(-7, 2).value() == -4);
    CHECK(floor_div<Checked64>(7, -2).value() == -4);
  }

  TEST_CASE("hermite normal form is echelon and reduced") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
      IntMatrix P;
      IntMatrix H = hermite_normal_form(m, &P);
      CHECK(P * m == H);
      CHECK(is_unimodular(P));
      std::size_t last_pivot = 0;
      bool seen_zero_row = false;
      for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t j = 0;
        while (j < H.cols() && H(i, j) == 0) ++j;
        if (j == H.cols()) {
          seen_zero_row = true;
          continue;
        }
        CHECK_FALSE(seen_zero_row);
        if (i > 0) CHECK(j > last_pivot);
        last_pivot = j;
        CHECK(H(i, j) > 0);
        for (std::size_t k = 0; k < i; ++k) {
          CHECK(H(k, j) >= 0);
          CHECK(H(k, j) < H(i, j));
        }
      }
    }
  }

  TEST_CASE("quotient lattice is exact") {
    std::mt19937_64 rng(5);
    int built = 0;
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t d = 3 + rng() % 4;
      IntMatrix b = random_matrix(rng, d, 2, 3);
      if (rank_of(b) < 2) {
        CHECK_THROWS_AS(quotient_lattice(b), NotInjectiveError);
        continue;
      }
      if (!is_saturated(b)) {
        CHECK_THROWS_AS(quotient_lattice(b), NotSaturatedError);
        continue;
      }
      auto q = quotient_lattice(b);
      CHECK((q.A * b).is_zero());
      CHECK(q.A * q.section == IntMatrix::identity(d - 2));
      auto inv = smith_normal_form(q.A).invariant_factors();
      CHECK(inv.size() == d - 2);
      for (const auto& s : inv) CHECK(s == 1);
      CHECK(hermite_normal_form(q.A) == q.A);
      ++built;
    }
    CHECK(built > 10);
  }

  TEST_CASE("saturation and rank errors") {
    CHECK_FALSE(is_saturated(im({{2, 0}, {0, 2}, {2, 2}})));
    CHECK(is_saturated(im({{1, 0}, {0, 1}, {1, 1}})));
    CHECK_THROWS_AS(is_saturated(im({{1, 2}, {2, 4}, {3, 6}})), RankDeficientError);
    try {
      quotient_lattice(im({{2, 0}, {0, 2}, {2, 2}}));
      FAIL("expected NotSaturatedError");
    } catch (const NotSaturatedError& e) {
      CHECK(e.invariant_factors == std::vector<Integer>{2, 2});
    }
  }

  TEST_CASE("integer solutions agree with a box search") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m = random_matrix(rng, 2, 2, 3);
      IntVector rhs = {Integer(long(rng() % 7) - 3), Integer(long(rng() % 7) - 3)};
      bool box = false;
      for (long x = -40; x <= 40 && !box; ++x)
        for (long y = -40; y <= 40; ++y)
          if (m(0, 0) * x + m(0, 1) * y == rhs[0] && m(1, 0) * x + m(1, 1) * y == rhs[1]) {
            box = true;
            break;
          }
      auto sol = solve_integer(m, rhs);
      if (sol) CHECK(m * *sol == rhs);
      // With |det| <= 18 and small right-hand sides any solution set that is
      // nonempty meets the box.
      CHECK(sol.has_value() == box);
    }
  }

  TEST_CASE("rational solutions") {
    auto m = im({{1, 1, 1}, {1, 2, 3}});
    auto sol = solve_rational(m, iv({1, 1}));
    REQUIRE(sol);
    CHECK((*sol)[0] + (*sol)[1] + (*sol)[2] == 1);
    CHECK_FALSE(solve_rational(im({{1, 1}, {2, 2}}), iv({1, 3})));
    auto half = solve_rational(im({{2}}), iv({1}));
    REQUIRE(half);
    CHECK((*half)[0] == Rational(1, 2));
    CHECK_FALSE(solve_integer(im({{2}}), iv({1})));
  }

  TEST_CASE("primitive part and content") {
    CHECK(primitive_part(iv({4, -6, 2})) == iv({2, -3, 1}));
    CHECK(content(iv({4, -6, 2})) == 2);
    CHECK(primitive_part(iv({0, 0})) == iv({0, 0}));
    auto p = RationalPoint::from({Rational(1, 2), Rational(-1, 3)});
    CHECK(p.denominator == 6);
    CHECK(p.numerators == iv({3, -2}));
  }

  TEST_CASE("two-variable LP matches vertex enumeration") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<LinearConstraint> cs;
      const int k = 3 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) {
        long a = long(rng() % 7) - 3, b = long(rng() % 7) - 3, c = long(rng() % 9);
        cs.push_back({{Rational(a), Rational(b)}, Relation::LessEqual, Rational(c)});
      }
      // keep the region bounded
      for (long s : {-1L, 1L}) {
        cs.push_back({{Rational(s), Rational(0)}, Relation::LessEqual, Rational(10)});
        cs.push_back({{Rational(0), Rational(s)}, Relation::LessEqual, Rational(10)});
      }
      std::vector<Rational> obj = {Rational(long(rng() % 5) - 2), Rational(long(rng() % 5) - 2)};
      std::optional<Rational> best;
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          const auto& p = cs[i].coeffs;
          const auto& q = cs[j].coeffs;
          Rational dt = p[0] * q[1] - p[1] * q[0];
          if (dt == 0) continue;
          Rational x = (cs[i].rhs * q[1] - p[1] * cs[j].rhs) / dt;
          Rational y = (p[0] * cs[j].rhs - cs[i].rhs * q[0]) / dt;
          bool feasible = true;
          for (const auto& c : cs)
            if (c.coeffs[0] * x + c.coeffs[1] * y > c.rhs) feasible = false;
          if (!feasible) continue;
          Rational v = obj[0] * x + obj[1] * y;
          if (!best || v > *best) best = v;
        }
      auto res = rational_maximize(2, cs, obj);
      CHECK(res.feasible == best.has_value());
      if (best) {
        CHECK_FALSE(res.unbounded);
        CHECK(res.value == *best);
        auto pt = res.point.coordinates();
        for (const auto& c : cs) CHECK(c.coeffs[0] * pt[0] + c.coeffs[1] * pt[1] <= c.rhs);
      }
      CHECK(rational_feasible(2, cs).has_value() == best.has_value());
    }
  }

  TEST_CASE("unbounded and infeasible LPs") {
    std::vector<LinearConstraint> cs = {{{Rational(1), Rational(0)}, Relation::GreaterEqual, Rational(0)}};
    auto res = rational_maximize(2, cs, {Rational(1), Rational(0)});
    CHECK(res.feasible);
    CHECK(res.unbounded);
    cs.push_back({{Rational(1), Rational(0)}, Relation::Equal, Rational(-1)});
    CHECK_FALSE(rational_maximize(2, cs, {Rational(1), Rational(0)}).feasible);
  }

  TEST_CASE("cone membership and strict convexity") {
    std::vector<IntVector> quadrant = {iv({1, 0}), iv({0, 1})};
    CHECK(in_cone(quadrant, iv({2, 3})));
    CHECK_FALSE(in_cone(quadrant, iv({-1, 3})));
    CHECK(is_strictly_convex(quadrant));
    std::vector<IntVector> halfplane = {iv({1, 0}), iv({-1, 0}), iv({0, 1})};
    CHECK_FALSE(is_strictly_convex(halfplane));
    CHECK_THROWS_AS(dual_facets(halfplane), NotStrictlyConvexError);
    CHECK_THROWS_AS(dual_facets(std::vector<IntVector>{iv({1, 0, 0}), iv({0, 1, 0})}), InvalidArgument);
  }

  TEST_CASE("facets agree with subset enumeration") {
    std::mt19937_64 rng(19);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 3 + rng() % 2;
      const std::size_t r = n + rng() % 4;
      std::vector<IntVector> gens;
      // generators in the open half-space x_n > 0, so the cone is pointed
      for (std::size_t i = 0; i < r; ++i) {
        IntVector g(n);
        for (std::size_t k = 0; k + 1 < n; ++k) g[k] = long(rng() % 7) - 3;
        g[n - 1] = 1 + long(rng() % 3);
        gens.push_back(g);
      }
      if (rank_of(IntMatrix::from_rows(gens)) < n) continue;
      CHECK(dual_facets(gens) == brute_force_facets(gens));
      ++checked;
    }
    CHECK(checked > 30);
  }
}
