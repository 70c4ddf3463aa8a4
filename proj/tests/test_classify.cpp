#include <doctest.h>

#include "support.hpp"

using namespace toricfold;

TEST_SUITE("classify") {
  TEST_CASE("minimal models of the cyclic examples") {
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"Sigma2", "P1xP1"}, {"Sigma3", "P2"}, {"Sigma4", "P1xP1"}, {"Sigma6", "Bl3P2"}};
    for (const auto& [name, model] : expected) {
      CAPTURE(name);
      auto f = catalog(name);
      auto c = minimal_model(f);
      CHECK(c.foldable);
      CHECK(c.minimal_model == model);
      CHECK(replay_blowups(c.minimal, c.blowdown_sequence) == f);
      REQUIRE(c.model_isomorphism);
      CHECK(change_basis(c.minimal, *c.model_isomorphism) == catalog(model));
    }
  }

  TEST_CASE("every contraction removes one orbit of size p") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto f = testing_support::random_foldable(s);
      auto c = minimal_model(f);
      CHECK(c.foldable);
      CHECK(f.size() % static_cast<std::size_t>(c.p) == 0);
      std::size_t rays = f.size();
      for (const auto& step : c.blowdown_sequence) {
        CHECK(step.orbit.size() == static_cast<std::size_t>(c.p));
        rays -= step.orbit.size();
        CHECK(rays % static_cast<std::size_t>(c.p) == 0);
      }
      CHECK(rays == c.minimal.size());
      CHECK(replay_blowups(c.minimal, c.blowdown_sequence) == f);
      CHECK(c.minimal_model != "other");
      CHECK(c.csck != CscK::Unknown);
    }
  }

  TEST_CASE("plain reduction ends with at most four rays") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto f = testing_support::random_fan(s);
      auto c = minimal_model(f);
      // every fan with more than four rays has a (-1)-ray; orbit contractions
      // of foldable fans may stop earlier
      if (!c.foldable) CHECK(c.minimal.size() <= 4);
      CHECK(replay_blowups(c.minimal, c.blowdown_sequence) == f);
    }
  }

  TEST_CASE("cscK flag") {
    CHECK(minimal_model(catalog("Y3")).csck == CscK::YesByFoldability);
    CHECK(minimal_model(catalog("P2")).csck == CscK::RigidClassical);
    CHECK(minimal_model(catalog("NonGorensteinX")).csck == CscK::Unknown);
    CHECK(minimal_model(catalog("P2")).rigid);
    CHECK_FALSE(minimal_model(catalog("Y3")).rigid);
    CHECK(to_string(CscK::YesByFoldability) == "yes-by-foldability");
  }

  TEST_CASE("random foldable fans") {
    RandomFanOptions o;
    o.base = "Y4";
    o.rounds = 0;
    CHECK(random_foldable_fan(o) == catalog("Y4"));

    o.base = "P1xP1";
    o.rounds = 1;
    o.order = 2;
    for (std::uint64_t s = 0; s < 10; ++s) {
      o.seed = s;
      auto f = random_foldable_fan(o);
      CHECK(f.size() == 6);
      for (const auto& u : f.rays()) CHECK(f.contains(neg2(u)));
    }

    o.base = "Y3";
    o.rounds = 2;
    o.order = 3;
    for (std::uint64_t s = 0; s < 10; ++s) {
      o.seed = s;
      CHECK(random_foldable_fan(o).size() == 15);
    }

    o.order = 0;
    o.seed = 42;
    CHECK(random_foldable_fan(o) == random_foldable_fan(o));
    o.rounds = 10;
    o.max_rays = 20;
    CHECK(random_foldable_fan(o).size() <= 20);

    o.base = "Sigma1";
    CHECK_THROWS_AS(random_foldable_fan(o), InvalidBase);
    o.base = "P2";
    o.order = 4;
    CHECK_THROWS_AS(random_foldable_fan(o), InvalidArgument);
  }

  TEST_CASE("full report sections") {
    auto y4 = full_report(catalog("Y4"));
    CHECK(y4.group.type == GroupType::D4);
    CHECK(y4.foldability.p == 4);
    CHECK(y4.weights.total_dim() == 4);
    REQUIRE(y4.singularity);
    CHECK(y4.singularity->smooth);
    CHECK(y4.descended_group.size() == 8);

    auto p2 = full_report(catalog("P2"));
    CHECK(p2.weights.empty());
    CHECK_FALSE(p2.quotient);
    CHECK(p2.roots.roots.size() == 6);
    REQUIRE(p2.classification);
    CHECK(p2.classification->rigid);

    auto x = full_report(catalog("NonGorensteinX"));
    REQUIRE(x.singularity);
    CHECK_FALSE(x.singularity->q_gorenstein);

    // a failing quotient does not stop the other sections
    auto h = full_report(catalog("Hirzebruch(4)"));
    REQUIRE(h.quotient_failure);
    CHECK(*h.quotient_failure == QuotientFailure::NotStrictlyConvex);
    CHECK(h.classification);
    CHECK(h.group.type == GroupType::D1);
  }

  TEST_CASE("flags are invariant under a change of basis") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      auto f = testing_support::random_foldable(s);
      auto g = testing_support::random_unimodular(s + 500);
      auto a = full_report(f);
      auto b = full_report(change_basis(f, g));
      CHECK(a.foldability.foldable == b.foldability.foldable);
      CHECK(a.weights.empty() == b.weights.empty());
      REQUIRE(a.singularity);
      REQUIRE(b.singularity);
      CHECK(a.singularity->gorenstein == b.singularity->gorenstein);
      CHECK(a.singularity->terminal == b.singularity->terminal);
      CHECK(a.singularity->simplicial == b.singularity->simplicial);
    }
  }
}
