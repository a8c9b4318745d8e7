#include <doctest.h>

#include "oblab/bipolarity.hpp"

using namespace oblab;

TEST_CASE("level arithmetic") {
  CHECK(level_plus(Level::at(3), EtaDepth::of(2)) == Level::at(5));
  CHECK(level_plus(Level::at(3), EtaDepth::null_homotopic()) == Level::all());
  CHECK(level_plus(Level::all(), EtaDepth::of(1)) == Level::all());
  CHECK(level_min(Level::at(2), Level::at(5)) == Level::at(2));
  CHECK(level_min(Level::all(), Level::at(5)) == Level::at(5));
  CHECK(level_min(Level::all(), Level::all()) == Level::all());
}

TEST_CASE("example derivation at level 2 has three nodes") {
  ExampleCertificates ex = certify_example_knots(2, 1);
  CHECK(ex.negative.level == Level::at(2));
  CHECK(ex.negative.polarity == Polarity::negative);
  CHECK(ex.negative.node_count() == 3);
  CHECK(ex.negative.depth_count() == 3);
  CHECK(ex.negative.knot == "K[1]");
  CHECK(ex.positive.level.forall);
  CHECK(ex.positive.polarity == Polarity::positive);
  CHECK(ex.positive.knot == "K[1]");
  FactBase facts = example_fact_base(1);
  CHECK(replay(ex.negative, facts));
  CHECK(replay(ex.positive, facts));
}

TEST_CASE("example derivation at level 5 has depth six") {
  ExampleCertificates ex = certify_example_knots(5, 2);
  CHECK(ex.negative.level == Level::at(5));
  CHECK(ex.negative.depth_count() == 6);
  CHECK(replay(ex.negative, example_fact_base(2)));
}

TEST_CASE("positive certificate is forall-level for every n") {
  for (long n = 2; n <= 9; ++n) {
    ExampleCertificates ex = certify_example_knots(n, 0);
    REQUIRE(ex.positive.level.forall);
    // positive chain has fixed shape regardless of n
    REQUIRE(ex.positive.node_count() == 3);
    REQUIRE(replay(ex.positive, example_fact_base(0)));
  }
  CHECK_THROWS(certify_example_knots(1, 0));
}

TEST_CASE("r nested depth-1 satellite steps raise the level by r") {
  FactBase facts;
  facts["P"] = {kSliceAttr};
  facts["B"] = {kZeroNegativeAttr, kZeroPositiveAttr};
  for (long r = 0; r <= 10; ++r) {
    Certificate c = rule_axiom(facts, "B", Polarity::negative);
    for (long j = 0; j < r; ++j)
      c = rule_satellite(facts, "P", EtaDepth::of(1), std::move(c),
                         "S" + std::to_string(j));
    CHECK(c.level == Level::at(r));
    CHECK(replay(c, facts));
  }
}

TEST_CASE("connected sum takes the minimum level") {
  FactBase facts;
  facts["P"] = {kSliceAttr};
  facts["B"] = {kZeroPositiveAttr};
  facts["S"] = {kSliceAttr};
  Certificate low = rule_axiom(facts, "B", Polarity::positive);
  Certificate high = rule_satellite(facts, "P", EtaDepth::of(4),
                                    rule_axiom(facts, "B", Polarity::positive),
                                    "H");
  Certificate sliceAll = rule_slice(facts, "S", Polarity::positive);
  Certificate sum = rule_connected_sum({high, sliceAll, low});
  CHECK(sum.level == Level::at(0));
  CHECK(sum.knot == "H # S # B");
  CHECK(replay(sum, facts));

  Certificate sumHigh = rule_connected_sum(
      {high, rule_satellite(facts, "P", EtaDepth::null_homotopic(),
                            rule_axiom(facts, "B", Polarity::positive), "W")});
  CHECK(sumHigh.level == Level::at(4));

  Certificate neg = rule_mirror(low);
  CHECK(neg.polarity == Polarity::negative);
  CHECK(replay(neg, facts));
  CHECK_THROWS(rule_connected_sum({sum, neg}));
  CHECK_THROWS(rule_connected_sum({}));
}

TEST_CASE("replay rejects tampered certificates and missing facts") {
  FactBase facts = example_fact_base(3);
  ExampleCertificates ex = certify_example_knots(4, 3, facts);

  Certificate wrongLevel = ex.negative;
  wrongLevel.level = Level::at(5);
  CHECK(!replay(wrongLevel, facts));

  Certificate wrongPolarity = ex.negative;
  wrongPolarity.polarity = Polarity::positive;
  CHECK(!replay(wrongPolarity, facts));

  Certificate wrongDepth = ex.negative;
  wrongDepth.depth = EtaDepth::of(2);
  CHECK(!replay(wrongDepth, facts));

  Certificate deepTamper = ex.negative;
  deepTamper.premises[0].premises[0].level = Level::at(1);
  CHECK(!replay(deepTamper, facts));

  Certificate unknownRule = ex.negative;
  unknownRule.rule = "conjecture";
  CHECK(!replay(unknownRule, facts));

  FactBase weaker = facts;
  weaker.erase("stevedore");
  CHECK(!replay(ex.negative, weaker));
  CHECK(replay(ex.positive, weaker));

  FactBase noTrefoil = facts;
  noTrefoil.erase("T");
  CHECK(!replay(ex.positive, noTrefoil));
}

TEST_CASE("rule preconditions") {
  FactBase facts;
  facts["K"] = {kNegativeUnknotAttr};
  Certificate c = rule_crossing_change(facts, "K", Polarity::negative);
  CHECK(c.level == Level::at(0));
  CHECK_THROWS(rule_crossing_change(facts, "K", Polarity::positive));
  CHECK_THROWS(rule_axiom(facts, "K", Polarity::negative));
  CHECK_THROWS(rule_slice(facts, "K", Polarity::negative));
  CHECK_THROWS(rule_satellite(facts, "K", EtaDepth::of(1),
                              rule_crossing_change(facts, "K",
                                                   Polarity::negative),
                              "X"));
}
