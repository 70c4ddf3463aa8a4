#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace toricfold;

namespace {

FanDefect defect_of(std::vector<Vec2> rays) {
  try {
    Fan2D::validate(std::move(rays));
  } catch (const FanError& e) {
    return e.defect;
  }
  FAIL("expected a FanError");
  return FanDefect::TooFewRays;
}

}  // namespace

TEST_SUITE("fan2") {
  TEST_CASE("validation sorts and rotates to the least ray") {
    auto f = Fan2D::validate({{0, 1}, {-1, -1}, {1, 0}});
    CHECK(f.rays() == std::vector<Vec2>{{-1, -1}, {1, 0}, {0, 1}});
    auto g = Fan2D::validate({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(f == g);
  }

  TEST_CASE("each defect is reported") {
    CHECK(defect_of({{1, 0}, {0, 1}}) == FanDefect::TooFewRays);
    CHECK(defect_of({{1, 0}, {0, 1}, {0, 0}}) == FanDefect::ZeroRay);
    CHECK(defect_of({{2, 0}, {0, 1}, {-1, -1}}) == FanDefect::NotPrimitive);
    CHECK(defect_of({{1, 0}, {0, 1}, {-1, -1}, {1, 0}}) == FanDefect::Duplicate);
    CHECK(defect_of({{1, 0}, {0, 1}, {-1, 0}, {1, -2}}) == FanDefect::NotSmooth);
    // all rays in a half-plane: not complete
    CHECK(defect_of({{1, 0}, {1, 1}, {0, 1}}) == FanDefect::NotSmooth);
    CHECK(to_string(FanDefect::NotSmooth) == "not_smooth");
  }

  TEST_CASE("catalog sizes") {
    CHECK(catalog("P2").size() == 3);
    CHECK(catalog("P1xP1").size() == 4);
    CHECK(catalog("Bl3P2").size() == 6);
    CHECK(catalog("Y2").size() == 8);
    CHECK(catalog("Y3").size() == 9);
    CHECK(catalog("Y4").size() == 8);
    CHECK(catalog("Sigma6").size() == 18);
    CHECK(catalog("Hirzebruch(3)").rays() == std::vector<Vec2>{{-1, -3}, {0, -1}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(catalog("nope"), UnknownCatalogName);
    CHECK_THROWS_AS(catalog("Hirzebruch(x)"), UnknownCatalogName);
    for (const auto& name : catalog_names()) CHECK(catalog(name).name() == name);
  }

  TEST_CASE("self-intersections satisfy the relation and Noether's formula") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      auto f = testing_support::random_fan(s);
      auto a = self_intersections(f);
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto ii = static_cast<std::ptrdiff_t>(i);
        Vec2 lhs = add2(f.ray(ii - 1), f.ray(ii + 1));
        CHECK(lhs == Vec2{-a[i] * f.ray(ii)[0], -a[i] * f.ray(ii)[1]});
        sum += 3 + a[i];
      }
      CHECK(sum == 12);
    }
    CHECK(self_intersections(catalog("P2")) == std::vector<std::int64_t>{1, 1, 1});
  }

  TEST_CASE("blow-up then blow-down is the identity") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      auto f = testing_support::random_fan(s);
      for (std::size_t c = 0; c < f.size(); ++c) {
        auto g = blow_up(f, c);
        CHECK(g.size() == f.size() + 1);
        Vec2 added = add2(f.rays()[c], f.ray(static_cast<std::ptrdiff_t>(c) + 1));
        auto idx = g.index_of(added);
        REQUIRE(idx);
        CHECK(self_intersections(g)[*idx] == -1);
        CHECK(blow_down(g, *idx) == f);
      }
    }
    CHECK_THROWS_AS(blow_down(catalog("P1xP1"), 0), NotContractibleError);
  }

  TEST_CASE("change of basis and isomorphism search") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      auto f = testing_support::random_fan(s);
      auto g = testing_support::random_unimodular(s + 1000);
      auto h = change_basis(f, g);
      auto iso = fans_isomorphic(f, h);
      REQUIRE(iso);
      CHECK(change_basis(f, *iso) == h);
      CHECK(self_intersections(h).size() == f.size());
    }
    CHECK_FALSE(fans_isomorphic(catalog("Hirzebruch(2)"), catalog("Hirzebruch(3)")));
    CHECK(fans_isomorphic(catalog("Y2"), catalog("Sigma2'")));
    CHECK_THROWS_AS(change_basis(catalog("P2"), Mat2{2, 0, 0, 1}), InvalidArgument);
  }

  TEST_CASE("matrix helpers") {
    Mat2 g{2, 1, 1, 1};
    CHECK(g * g.inverse() == Mat2::identity());
    CHECK(covector_times({1, 0}, g) == Vec2{2, 1});
    CHECK(is_primitive({2, 3}));
    CHECK_FALSE(is_primitive({2, 4}));
    CHECK(angle_less({1, 0}, {0, 1}));
    CHECK(angle_less({0, 1}, {0, -1}));
    CHECK_FALSE(angle_less({0, -1}, {1, 0}));
  }
}
