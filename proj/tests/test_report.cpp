#include <doctest.h>

#include "support.hpp"
#include "toricfold/render.hpp"
#include "toricfold/report.hpp"

using namespace toricfold;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

// Fails on any floating-point value anywhere in the document.
bool integers_only(const nlohmann::json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& x : j)
      if (!integers_only(x)) return false;
  return true;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("fan documents") {
    auto doc = parse_fan_document(R"({"name": "triangle", "rays": [[0, 1], [-1, -1], [1, 0]]})");
    CHECK(doc.name == "triangle");
    CHECK(doc.rays.size() == 3);
    auto f = Fan2D::validate(doc.rays, doc.name);
    auto j = fan_to_json(f);
    CHECK(j["rays"] == nlohmann::json::parse("[[-1,-1],[1,0],[0,1]]"));
    CHECK(j["name"] == "triangle");
    CHECK_THROWS_AS(parse_fan_document("{"), DocumentError);
    CHECK_THROWS_AS(parse_fan_document("[]"), DocumentError);
    CHECK_THROWS_AS(parse_fan_document(R"({"rays": [[1, 0, 2]]})"), DocumentError);
    CHECK_THROWS_AS(parse_fan_document(R"({"rays": [[1.5, 0]]})"), DocumentError);
    CHECK_THROWS_AS(parse_fan_document(R"({"name": 3, "rays": []})"), DocumentError);
  }

  TEST_CASE("report documents round-trip through the text form") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      auto doc = report_to_json(full_report(catalog(name)), {"catalog:" + name, std::nullopt});
      CHECK(integers_only(doc));
      auto text = json_to_text(doc);
      CHECK(json_from_text(text) == doc);
      CHECK(nlohmann::json::parse(doc.dump()) == doc);
    }
    auto seeded = report_to_json(full_report(testing_support::random_foldable(9)), {"random:Y2", 9});
    CHECK(json_from_text(json_to_text(seeded)) == seeded);
    CHECK(seeded["provenance"]["seed"] == 9);
    CHECK_THROWS_AS(json_from_text("no separator"), DocumentError);
  }

  TEST_CASE("report contents") {
    auto y4 = report_to_json(full_report(catalog("Y4")), {"catalog:Y4", std::nullopt});
    CHECK(y4["schema_version"] == kSchemaVersion);
    CHECK(y4["group_type"] == "D4");
    CHECK(y4["quotient"]["smooth"] == true);
    CHECK(y4["p"] == 4);
    auto x = report_to_json(full_report(catalog("NonGorensteinX")), {"catalog:NonGorensteinX", std::nullopt});
    CHECK(x["quotient"]["q_gorenstein"] == false);
    CHECK(x["quotient"]["cone_gorenstein"] == true);
    auto p2 = report_to_json(full_report(catalog("P2")), {"catalog:P2", std::nullopt});
    CHECK(p2["rigid"] == true);
    CHECK(p2["demazure_root_count"] == 6);
    CHECK(p2["quotient"].is_null());
    auto h = report_to_json(full_report(catalog("Hirzebruch(2)")), {"catalog:Hirzebruch(2)", std::nullopt});
    CHECK(h["quotient"]["status"] == "not_injective");
  }

  TEST_CASE("output is deterministic") {
    auto a = report_to_json(full_report(catalog("Y3")), {"catalog:Y3", std::nullopt}).dump(2);
    auto b = report_to_json(full_report(catalog("Y3")), {"catalog:Y3", std::nullopt}).dump(2);
    CHECK(a == b);
    CHECK(render_svg(catalog("Y3")) == render_svg(catalog("Y3")));
  }

  TEST_CASE("svg arrows and lattice") {
    CHECK(count(render_svg(catalog("Sigma6")), "class=\"ray\"") == 18);
    CHECK(count(render_svg(catalog("P2")), "class=\"ray\"") == 3);
    auto h2 = render_svg(catalog("Hirzebruch(2)"));
    CHECK(count(h2, "class=\"ray\"") == 4);
    // rays reach x in [-1, 1] and y in [-2, 1]; with margin one that is a
    // 5 x 6 grid of dots
    CHECK(count(h2, "<circle") == 30);
    // integer coordinates only: the namespace URL holds the only dots
    CHECK(count(h2, ".") == 2);
  }
}
