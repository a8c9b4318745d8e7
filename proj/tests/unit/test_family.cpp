#include <doctest.h>

#include <random>

#include "oblab/family.hpp"

using namespace oblab;

TEST_CASE("family polynomial coefficients") {
  FamilyPolynomial f = family_polynomial(0, 1);
  CHECK(f.delta ==
        LaurentPoly(QPoly::from_int({1, -2, 1, -2, 1}), -2));
  FamilyPolynomial g = family_polynomial(1, 2);
  CHECK(g.delta ==
        LaurentPoly(QPoly::from_int({2, -6, 7, -6, 2}), -2));
  CHECK(g.delta.is_symmetric());
  CHECK_THROWS(family_polynomial(1, 0));
  CHECK_THROWS(family_polynomial(1, -3));
}

TEST_CASE("family polynomial is -1 at t=1 for random parameters") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> ap(-5000, 5000), bp(1, 5000);
  for (int iter = 0; iter < 10000; ++iter) {
    FamilyPolynomial f = family_polynomial(ap(rng), bp(rng));
    REQUIRE(f.delta.eval(Rat(1)) == -1);
  }
}

TEST_CASE("substitution identity") {
  std::mt19937 rng(67);
  std::uniform_int_distribution<long> ap(-50, 50), bp(1, 50);
  for (int iter = 0; iter < 20; ++iter) {
    FamilyPolynomial f = family_polynomial(ap(rng), bp(rng));
    REQUIRE(substitute_t_plus_tinv(family_quadratic(f)) == f.delta);
  }
}

TEST_CASE("theta_one") {
  // (a,b) = (0,1): x = 1 - sqrt(2)
  AlgebraicAngle t = theta_one(0, 1);
  RealAlgebraic expected(QPoly::from_int({-1, -2, 1}), Rat(-1), Rat(0));
  CHECK(t.x.equals(expected));
  // both roots outside [-2,2]
  CHECK_THROWS_WITH(theta_one(-5, 1), "no unit-circle root");
  CHECK_THROWS_WITH(theta_one(-1, 1), "no unit-circle root");
}

TEST_CASE("parameter selection for (3,5)") {
  FamilySelection sel = choose_family_parameters({3, 5});
  REQUIRE(sel.entries.size() == 2);
  // index 1: x in (-1, 0), i.e. angle in (pi/2, 2pi/3)
  const SelectionEntry& e1 = sel.entries[0];
  CHECK(e1.prime == 3);
  CHECK(Rat(-1) < e1.cert_lo);
  CHECK(e1.cert_hi < Rat(0));
  CHECK(e1.profile.jumpAngle.x.compare(e1.cert_lo) > 0);
  CHECK(e1.profile.jumpAngle.x.compare(e1.cert_hi) < 0);
  // index 2: x in (-2cos(pi/5), -1), i.e. angle in (2pi/3, 4pi/5)
  const SelectionEntry& e2 = sel.entries[1];
  CHECK(e2.prime == 5);
  RealAlgebraic low = two_cos_pi_over(5).negated();
  CHECK(low.compare(e2.cert_lo) < 0);
  CHECK(e2.cert_hi < Rat(-1));
  CHECK(e2.profile.jumpAngle.x.compare(e2.cert_lo) > 0);
  CHECK(e2.profile.jumpAngle.x.compare(e2.cert_hi) < 0);

  CHECK(choose_family_parameters({3}).entries.size() == 1);
  CHECK_THROWS(choose_family_parameters({3, 3}));
  CHECK_THROWS(choose_family_parameters({5, 3}));
  CHECK_THROWS(choose_family_parameters({3, 9}));
  CHECK_THROWS(choose_family_parameters({2, 3}));
}

TEST_CASE("selection over the first five odd primes satisfies the matrix") {
  std::vector<long> primes{3, 5, 7, 11, 13};
  FamilySelection sel = choose_family_parameters(primes);
  REQUIRE(sel.entries.size() == 5);
  for (std::size_t j = 0; j < 5; ++j) {
    // own prime: lower bound applies
    Rat canon(4, primes[j]);
    canon.canonicalize();
    CHECK(rho_lower_bound(sel.entries[j].profile, primes[j]) == canon);
    // own prime does not vanish
    CHECK(!rho_vanishes(sel.entries[j].profile, primes[j]));
    for (std::size_t i = 0; i < j; ++i) {
      // earlier primes: average vanishes exactly
      REQUIRE(rho_vanishes(sel.entries[j].profile, primes[i]));
    }
  }
  // the jump of a later index is too high for an earlier prime's bound
  CHECK_THROWS_WITH(rho_lower_bound(sel.entries[1].profile, 3),
                    "jump too high");
  // multiplicity scales the bound
  SignatureProfile doubled = sel.entries[0].profile;
  doubled.multiplicity = 2;
  Rat eight_thirds(8, 3);
  CHECK(rho_lower_bound(doubled, 3) == eight_thirds);
  CHECK(rho_vanishes(sel.entries[0].profile, 1));
}

TEST_CASE("required multiplicities") {
  CHECK(required_multiplicity(2, 3) == Int("5333065921"));
  CHECK(required_multiplicity(2, 5) == Int("8888443201"));
  // monotone in both arguments
  CHECK(required_multiplicity(3, 3) < required_multiplicity(4, 3));
  CHECK(required_multiplicity(2, 3) < required_multiplicity(2, 5));
  // N * (4/p) strictly exceeds the budget
  for (long n = 2; n <= 6; ++n)
    for (long p : {3, 5, 7, 11, 13}) {
      Int n_req = required_multiplicity(n, p);
      Rat bound = Rat(4 * n_req, Int(p));
      bound.canonicalize();
      REQUIRE(bound > Rat(total_budget(n)));
    }
  CHECK_THROWS(required_multiplicity(1, 3));
  CHECK_THROWS(required_multiplicity(2, 4));
}

TEST_CASE("budget arithmetic") {
  CHECK(total_budget(2) == Int("7110754560"));
  BudgetReport rep = case1_budget(2, Rat(1), 1);
  CHECK(rep.totalBudget == Int("7110754560"));
  REQUIRE(rep.perTermBounds.size() == 2);
  CHECK(rep.perTermBounds[0] == 6 * kBudgetUnit);
  CHECK(rep.perTermBounds[1] == 96 * kBudgetUnit);
  CHECK(!rep.contradiction);

  BudgetReport over = case1_budget(2, Rat(Int("7110754561")), 1);
  CHECK(over.contradiction);
  // boundary: equality is not a contradiction
  CHECK(!case1_budget(2, Rat(Int("7110754560")), 1).contradiction);

  // magnitude produced by the required multiplicity contradicts for all r
  for (long n = 2; n <= 4; ++n)
    for (long r : {1l, 2l, 7l}) {
      Rat mag = Rat(4 * required_multiplicity(n, 3), Int(3));
      mag.canonicalize();
      REQUIRE(case1_budget(n, mag, r).contradiction);
    }
  CHECK_THROWS(case1_budget(1, Rat(1), 1));
  CHECK_THROWS(case1_budget(2, Rat(1), 0));
}
