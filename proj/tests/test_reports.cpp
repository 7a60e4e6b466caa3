#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wfc/families.hpp"
#include "wfc/report_json.hpp"
#include "wfc/theorems.hpp"

using namespace wfc;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(WFC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// The CLI prints exactly these documents; tests/run_cli_golden.cmake checks that side.
TEST_CASE("golden: analyze cycle:4") {
  CHECK(dump(analyze_json(generate(parse_family("cycle:4")))) == golden("analyze_cycle4.json"));
}

TEST_CASE("golden: check-theorem thm31 empty:3 cycle:4") {
  const auto r = check_thm31(generate(parse_family("empty:3")), generate(parse_family("cycle:4")));
  CHECK(dump(report_json(r)) == golden("check_thm31_empty3_cycle4.json"));
}

TEST_CASE("golden: check-theorem thm35 cycle:5 cycle:4") {
  const auto r = check_thm35(generate(parse_family("cycle:5")), generate(parse_family("cycle:4")));
  CHECK(dump(report_json(r)) == golden("check_thm35_cycle5_cycle4.json"));
}

TEST_CASE("golden: verify-paper") {
  CHECK(dump(report_json(verify_paper_examples())) == golden("verify_paper.json"));
}

TEST_CASE("analyze fields") {
  const auto j = analyze_json(generate(parse_family("cycle:4")));
  CHECK(j["schema"] == 1);
  CHECK(j["forest_number"] == 3);
  CHECK(j["well_f_covered"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j["independence_number"] == 2);
  CHECK(j["well_covered"] == true);
  CHECK(j["maximal_forest_orders_histogram"] == nlohmann::json{{"3", 4}});
}

TEST_CASE("report JSON names product vertices as (g,h) pairs") {
  const auto r = check_thm35(generate(parse_family("complete:2")), generate(parse_family("cycle:4")));
  const auto j = report_json(r);
  CHECK(j["theorem"] == "thm35");
  for (const auto& w : j["witnesses"]) {
    for (const auto& pair : w["set"]) {
      REQUIRE(pair.size() == 2);
      CHECK(pair[0].get<int>() < 2);
      CHECK(pair[1].get<int>() < 4);
    }
  }
}

TEST_CASE("product JSON legend") {
  const auto p = lexicographic(generate(parse_family("path:2")), generate(parse_family("path:3")));
  const auto j = product_json(p);
  CHECK(j["order"] == 6);
  CHECK(j["index_map"]["vertices"][4] == nlohmann::json::array({1, 1}));
  CHECK(j["warning"].is_null());
}
