#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "cobound/scenario.hpp"

using namespace cobound;
using nlohmann::json;

namespace {

json rotation_doc() {
  std::ifstream in(std::string(COBOUND_SCENARIO_DIR) + "/rotation_coboundary.json");
  return json::parse(in);
}

// Runs parse + prepare and returns the pointer of the ValidationError.
std::string pointer_of(const json& doc) {
  try {
    prepare_scenario(scenario_from_json(doc));
  } catch (const ValidationError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("rotation scenario parses and round-trips") {
  Scenario s = load_scenario(std::string(COBOUND_SCENARIO_DIR) + "/rotation_coboundary.json");
  CHECK(s.space.size() == 3);
  CHECK(s.group.order() == 3);
  CHECK(s.K == FinAbGroup({2}));
  CHECK(s.action[1] == std::vector<std::size_t>{1, 2, 0});
  nlohmann::ordered_json again = scenario_to_json(s);
  Scenario s2 = scenario_from_json(json(again));
  CHECK(scenario_to_json(s2).dump() == again.dump());
  CHECK(json(again) == rotation_doc());
  PreparedScenario p = prepare_scenario(s2);
  REQUIRE_FALSE(p.all_null());
  CHECK(p.cocycle->rho[2].values == std::vector<Element>{Element{0}, Element{1}, Element{1}});
}

TEST_CASE("validation pointers") {
  json doc = rotation_doc();

  SUBCASE("table without inverses") {
    doc["group"]["table"] = json::array({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}});
    CHECK(pointer_of(doc) == "/group/table");
  }
  SUBCASE("cocycle equation violated") {
    doc["cocycle"]["g"]["c"] = json::array({1});
    try {
      prepare_scenario(scenario_from_json(doc));
      FAIL("accepted");
    } catch (const ValidationError& e) {
      CHECK(e.pointer().rfind("/cocycle/", 0) == 0);
      std::string what = e.what();
      CHECK(what.find("gamma1=") != std::string::npos);
      CHECK(what.find("gamma2=") != std::string::npos);
      CHECK(what.find("atom=") != std::string::npos);
    }
  }
  SUBCASE("unknown atom in an action") {
    doc["action"]["g"]["a"] = "q";
    CHECK(pointer_of(doc) == "/action/g/a");
  }
  SUBCASE("missing action entry") {
    doc["action"]["g"].erase("b");
    CHECK(pointer_of(doc) == "/action/g/b");
  }
  SUBCASE("action is not a homomorphism") {
    doc["action"]["g2"] = {{"a", "a"}, {"b", "b"}, {"c", "c"}};
    CHECK(pointer_of(doc) == "/action");
  }
  SUBCASE("unreduced cocycle value") {
    doc["cocycle"]["g"]["a"] = json::array({2});
    CHECK(pointer_of(doc) == "/cocycle/g/a");
  }
  SUBCASE("bad weight") {
    doc["space"]["atoms"][1]["weight"] = "1/0";
    CHECK(pointer_of(doc) == "/space/atoms/1/weight");
  }
  SUBCASE("missing K") {
    doc.erase("K");
    CHECK(pointer_of(doc) == "/K");
  }
}

TEST_CASE("null atoms") {
  json doc = rotation_doc();
  doc["space"]["atoms"].push_back({{"id", "z"}, {"weight", "0"}});
  for (const auto& g : {"e", "g", "g2"}) doc["action"][g]["z"] = "z";
  PreparedScenario p = prepare_scenario(scenario_from_json(doc));
  REQUIRE_FALSE(p.all_null());
  CHECK(p.cocycle->action.atoms() == 3);

  // A positive atom landing on the null atom is rejected.
  doc["action"]["g"]["c"] = "z";
  CHECK(pointer_of(doc).rfind("/action", 0) == 0);

  json dead = rotation_doc();
  for (auto& atom : dead["space"]["atoms"]) atom["weight"] = "0";
  CHECK(prepare_scenario(scenario_from_json(dead)).all_null());
}

TEST_CASE("malformed JSON is a parse error") {
  try {
    load_scenario_text("{\"space\": ");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  try {
    load_scenario("/nonexistent/scenario.json");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}
