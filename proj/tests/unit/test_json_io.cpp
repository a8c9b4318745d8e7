#include <doctest.h>

#include "oblab/json_io.hpp"

using namespace oblab;

TEST_CASE("rationals serialize in lowest terms") {
  Rat v(4, 6);
  Json j = rat_json(v);  // not canonicalized by the caller
  CHECK(j["num"] == "2");
  CHECK(j["den"] == "3");
  CHECK(rat_json(Rat(-7))["den"] == "1");
}

TEST_CASE("seifert matrices parse from JSON") {
  Json j = Json::parse(R"({"name":"doubled","matrix":[[0,2],[1,0]]})");
  SeifertMatrix sm = seifert_from_json(j);
  CHECK(sm.V(0, 1) == 2);
  CHECK(sm.V(1, 0) == 1);
  // string entries for large values
  Json big = Json::parse(R"({"matrix":[["0","2"],["1","0"]]})");
  CHECK(seifert_from_json(big).V(0, 1) == 2);
  CHECK_THROWS(seifert_from_json(Json::parse(R"({"matrix":[[0,2]]})")));
  CHECK_THROWS(seifert_from_json(Json::parse(R"({"rows":[]})")));
}

TEST_CASE("certificates round-trip through JSON") {
  for (long n = 2; n <= 6; ++n) {
    FactBase facts = example_fact_base(1);
    ExampleCertificates ex = certify_example_knots(n, 1, facts);
    for (const Certificate* c : {&ex.negative, &ex.positive}) {
      Certificate back = certificate_from_json(certificate_json(*c));
      REQUIRE(back.knot == c->knot);
      REQUIRE(back.level == c->level);
      REQUIRE(back.polarity == c->polarity);
      REQUIRE(back.node_count() == c->node_count());
      REQUIRE(replay(back, facts));
    }
    FactBase backFacts = fact_base_from_json(fact_base_json(facts));
    REQUIRE(backFacts == facts);
  }
  CHECK_THROWS(certificate_from_json(Json::parse(R"({"rule":"axiom"})")));
}
