#include <doctest.h>

#include <random>

#include "oblab/seifert.hpp"

using namespace oblab;

namespace {

const SeifertMatrix kTrefoil{IntMatrix{{-1, 1}, {0, -1}}};
const SeifertMatrix kTwistDouble{IntMatrix{{0, 2}, {1, 0}}};

/// Random valid Seifert matrix of size 2g: standard skew part plus a random
/// symmetric integer matrix.
SeifertMatrix random_seifert(std::mt19937& rng, std::size_t g, long span = 3) {
  std::uniform_int_distribution<long> dist(-span, span);
  IntMatrix v(2 * g, 2 * g);
  for (std::size_t b = 0; b < g; ++b) v(2 * b, 2 * b + 1) = 1;
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = i; j < 2 * g; ++j) {
      Int s(dist(rng));
      v(i, j) += s;
      if (j > i) v(j, i) += s;
    }
  return SeifertMatrix(v);
}

}  // namespace

TEST_CASE("Seifert matrix validation") {
  CHECK_NOTHROW(SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}}));
  CHECK_THROWS(SeifertMatrix(IntMatrix{{1, 0}, {0, 1}}));   // skew part zero
  CHECK_THROWS(SeifertMatrix(IntMatrix{{1}}));              // odd size
  CHECK_THROWS(SeifertMatrix(IntMatrix{{0, 2}, {0, 0}}));   // det = 4
  CHECK_NOTHROW(SeifertMatrix(IntMatrix(0, 0)));            // unknot
}

TEST_CASE("Alexander polynomial reference values") {
  LaurentPoly tref = alexander_polynomial(kTrefoil);
  CHECK(tref.equals_up_to_unit(LaurentPoly(QPoly::from_int({1, -1, 1}))));
  LaurentPoly tw = alexander_polynomial(kTwistDouble);
  // (t-2)(2t-1) = 2t^2 - 5t + 2 up to unit
  CHECK(tw.equals_up_to_unit(LaurentPoly(QPoly::from_int({2, -5, 2}))));
  CHECK(alexander_polynomial(SeifertMatrix(IntMatrix(0, 0))) ==
        LaurentPoly::one());
  // symmetric centering
  CHECK(tref.is_symmetric());
  CHECK(tw.is_symmetric());
}

TEST_CASE("Alexander polynomial of a sum is the product") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    SeifertMatrix a = random_seifert(rng, 1 + iter % 3);
    SeifertMatrix b = random_seifert(rng, 1 + (iter / 3) % 3);
    LaurentPoly prod = alexander_polynomial(a) * alexander_polynomial(b);
    CHECK(alexander_polynomial(connected_sum(a, b)).equals_up_to_unit(prod));
  }
}

TEST_CASE("Alexander polynomial is +-1 at t=1 for random valid matrices") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    SeifertMatrix v = random_seifert(rng, 1 + iter % 4, 5);
    Rat at1 = alexander_polynomial(v).eval(Rat(1));
    REQUIRE((at1 == 1 || at1 == -1));
  }
}

TEST_CASE("signature fold") {
  QPoly q = signature_fold(alexander_polynomial(kTwistDouble));
  // -(2t-1)(t-2) centered is -2(t + 1/t) + 5, folding to 5 - 2x
  CHECK((q == QPoly::from_int({5, -2}) || q == QPoly::from_int({-5, 2})));
  CHECK(signature_fold(alexander_polynomial(kTrefoil))
            .eval(Rat(1)) == 0);  // jump at 2cos(pi/3) = 1
}

TEST_CASE("Levine-Tristram reference values") {
  CHECK(levine_tristram(kTrefoil, 1, 2) == -2);
  CHECK(levine_tristram(kTrefoil, 0, 1) == 0);
  CHECK(levine_tristram(mirror(kTrefoil), 1, 2) == 2);
  for (long d = 1; d <= 12; ++d)
    for (long k = 0; k < d; ++k) {
      CHECK(levine_tristram(kTwistDouble, k, d) == 0);
    }
  // trefoil singular points: jumps at e^{+-i pi/3}, i.e. k/d = 1/6 and 5/6
  CHECK(levine_tristram(kTrefoil, 1, 6) == -1);  // average of 0 and -2
  CHECK(levine_tristram(kTrefoil, 5, 6) == -1);
  CHECK(levine_tristram(kTrefoil, 1, 3) == -2);
  CHECK(levine_tristram(kTrefoil, 2, 3) == -2);
  CHECK(levine_tristram(kTrefoil, 1, 12) == 0);   // before the jump
  CHECK(levine_tristram(kTrefoil, 5, 12) == -2);  // after the jump
}

TEST_CASE("rho averages") {
  CHECK(rho_average(kTrefoil, 2) == -1);
  CHECK(rho_average(kTrefoil, 1) == 0);
  for (long d = 1; d <= 9; ++d) CHECK(rho_average(kTwistDouble, d) == 0);
  // d * average is the integer sum of the signatures
  for (long d = 1; d <= 8; ++d) {
    Rat sum(0);
    for (long k = 0; k < d; ++k) sum += levine_tristram(kTrefoil, k, d);
    CHECK(rho_average(kTrefoil, d) * d == sum);
  }
}

TEST_CASE("signatures are symmetric under conjugation and zero at 1") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    SeifertMatrix v = random_seifert(rng, 1 + iter % 3);
    CHECK(levine_tristram(v, 0, 1) == 0);
    for (long d = 2; d <= 7; ++d)
      for (long k = 1; k < d; ++k)
        REQUIRE(levine_tristram(v, k, d) == levine_tristram(v, d - k, d));
  }
}

TEST_CASE("additivity under connected sum and negation under mirror") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> dpick(1, 8);
  for (int iter = 0; iter < 500; ++iter) {
    SeifertMatrix a = random_seifert(rng, 1 + iter % 3);
    SeifertMatrix b = random_seifert(rng, 1 + (iter / 7) % 3);
    long d = dpick(rng);
    std::uniform_int_distribution<long> kpick(0, d - 1);
    long k = kpick(rng);
    Rat sa = levine_tristram(a, k, d);
    Rat sb = levine_tristram(b, k, d);
    REQUIRE(levine_tristram(connected_sum(a, b), k, d) == sa + sb);
    REQUIRE(levine_tristram(mirror(a), k, d) == -sa);
  }
  for (int iter = 0; iter < 40; ++iter) {
    SeifertMatrix a = random_seifert(rng, 1 + iter % 2);
    SeifertMatrix b = random_seifert(rng, 1 + (iter / 2) % 2);
    long d = 1 + iter % 5;
    REQUIRE(rho_average(connected_sum(a, b), d) ==
            rho_average(a, d) + rho_average(b, d));
    REQUIRE(rho_average(mirror(a), d) == -rho_average(a, d));
    REQUIRE(rho_average(connected_sum(a, a), d) == 2 * rho_average(a, d));
  }
}
