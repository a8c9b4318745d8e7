#include <doctest.h>

#include <random>

#include "oblab/algebraic.hpp"
#include "oblab/matrix.hpp"
#include "oblab/signature.hpp"
#include "oblab/snf.hpp"
#include "oblab/sturm.hpp"

using namespace oblab;

TEST_CASE("rational helpers") {
  CHECK(rational_mod_Z(Rat(7, 3)) == Rat(1, 3));
  CHECK(rational_mod_Z(Rat(-1, 4)) == Rat(3, 4));
  CHECK(rational_mod_Z(Rat(5)) == 0);
  CHECK(is_integer(Rat(4, 2)));
  CHECK(!is_integer(Rat(1, 2)));
  CHECK(pow2(5) == 32);
  CHECK(is_prime(Int(31)));
  CHECK(!is_prime(Int(33)));
  CHECK(is_prime_power(Int(27)));
  CHECK(is_prime_power(Int(7)));
  CHECK(!is_prime_power(Int(12)));
  CHECK(!is_prime_power(Int(1)));
}

TEST_CASE("matrix determinant and inverse") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(determinant(a) == -2);
  IntMatrix s{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
  CHECK(determinant(s) == 30);
  RatMatrix r = to_rational(a);
  RatMatrix inv = inverse(r);
  CHECK(r * inv == RatMatrix::identity(2));
  RatMatrix sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_THROWS(inverse(sing));
}

TEST_CASE("smith normal form reference values") {
  {
    SnfResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(s.diag == std::vector<Int>{2, 4});
  }
  {
    SnfResult s = smith_normal_form(IntMatrix{{0, 3}, {3, 0}});
    CHECK(s.diag == std::vector<Int>{3, 3});
  }
  {
    // rank-deficient
    SnfResult s = smith_normal_form(IntMatrix{{2, 4}, {1, 2}});
    CHECK(s.diag == std::vector<Int>{1, 0});
  }
}

static IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows,
                                   std::size_t cols, long span) {
  std::uniform_int_distribution<long> dist(-span, span);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(dist(rng));
  return m;
}

TEST_CASE("smith normal form transform identity and divisibility") {
  std::mt19937 rng(20260824);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m = random_int_matrix(rng, rows, cols, 50);
    SnfResult s = smith_normal_form(m);
    REQUIRE(s.left * m * s.right == s.diagonal_matrix(rows, cols));
    REQUIRE(abs(determinant(s.left)) == 1);
    REQUIRE(abs(determinant(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
      REQUIRE(s.diag[i] >= 0);
      if (s.diag[i] == 0)
        REQUIRE(s.diag[i + 1] == 0);
      else
        REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
    }
  }
}

TEST_CASE("smith normal form agrees with minor-gcd oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m = random_int_matrix(rng, rows, cols, 9);
    SnfResult s = smith_normal_form(m);
    REQUIRE(s.diag == elementary_divisors_minor_gcd(m));
  }
}

TEST_CASE("signature reference values") {
  CHECK(symmetric_signature(IntMatrix{{1, 3}, {3, 2}}) == 0);
  CHECK(symmetric_signature(IntMatrix{{2, 0}, {0, 5}}) == 2);
  CHECK(symmetric_signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
  CHECK(symmetric_signature(IntMatrix{{-3}}) == -1);
  CHECK(symmetric_signature(IntMatrix(0, 0)) == 0);
  CHECK(symmetric_signature(IntMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK_THROWS(symmetric_signature(IntMatrix{{0, 1}, {2, 0}}));
}

TEST_CASE("signature is additive and negates under mirror") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<long> dist(-9, 9);
  auto random_sym = [&](std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = Int(dist(rng));
        m(j, i) = m(i, j);
      }
    return m;
  };
  for (int iter = 0; iter < 500; ++iter) {
    IntMatrix a = random_sym(dim(rng));
    IntMatrix b = random_sym(dim(rng));
    long sa = symmetric_signature(a), sb = symmetric_signature(b);
    REQUIRE(symmetric_signature(IntMatrix::block_sum(a, b)) == sa + sb);
    REQUIRE(symmetric_signature(-a) == -sa);
  }
}

TEST_CASE("polynomial arithmetic") {
  QPoly p = QPoly::from_int({-1, 0, 1});  // x^2 - 1
  QPoly q = QPoly::from_int({1, 1});      // x + 1
  CHECK((p / q) == QPoly::from_int({-1, 1}));
  CHECK((p % q).is_zero());
  CHECK(q.divides(p));
  CHECK(p.eval(Rat(3)) == 8);
  CHECK(gcd(p, q) == q.monic());
  QPoly cube = q * q * QPoly::from_int({-2, 1});
  CHECK(squarefree_part(cube) == QPoly::from_int({-2, -1, 1}) * Rat(1));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == QPoly::from_int({-1, 1}));
  CHECK(cyclotomic(2) == QPoly::from_int({1, 1}));
  CHECK(cyclotomic(6) == QPoly::from_int({1, -1, 1}));
  CHECK(cyclotomic(12) == QPoly::from_int({1, 0, -1, 0, 1}));
  CHECK(real_cyclotomic(3) == QPoly::from_int({1, 1}));    // 2cos(2pi/3) = -1
  CHECK(real_cyclotomic(4) == QPoly::from_int({0, 1}));    // 2cos(pi/2) = 0
  CHECK(real_cyclotomic(5) == QPoly::from_int({-1, 1, 1}));
  CHECK(real_cyclotomic(6) == QPoly::from_int({-1, 1}));   // 2cos(pi/3) = 1
  // roots of the fold are 2cos(2 pi k/n) for k coprime to n: check via p_j
  for (unsigned long n : {7ul, 9ul, 10ul, 12ul, 15ul}) {
    QPoly psi = real_cyclotomic(n);
    CHECK(psi.degree() * 2 == cyclotomic(n).degree() * 1);
  }
}

TEST_CASE("two_cos_multiple composes like cosine multiples") {
  // p_j(x)^2 - 2 = p_{2j}(x) since (2cos a)^2 - 2 = 2cos 2a
  for (std::size_t j = 1; j <= 6; ++j) {
    QPoly pj = two_cos_multiple(j);
    CHECK(pj * pj - QPoly(Rat(2)) == two_cos_multiple(2 * j));
  }
}

TEST_CASE("sturm root counting and isolation") {
  QPoly p = QPoly::from_int({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  SturmChain c(p);
  CHECK(c.count(Rat(0), Rat(4)) == 3);
  CHECK(c.count(Rat(0), Rat(Rat(3, 2))) == 1);
  auto roots = isolate_roots(p, Rat(0), Rat(10));
  REQUIRE(roots.size() == 3);
  // open interval excludes endpoint roots
  CHECK(isolate_roots(p, Rat(1), Rat(3)).size() == 1);
  CHECK(isolate_roots(p, Rat(1), Rat(2)).empty());
  // repeated roots are collapsed
  QPoly sq = p * p;
  CHECK(isolate_roots(sq, Rat(0), Rat(10)).size() == 3);
}

TEST_CASE("sturm counts match the factored truth on random cubics/quartics") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<long> root(-10, 10);
  std::uniform_int_distribution<int> degree(3, 4);
  for (int iter = 0; iter < 200; ++iter) {
    int deg = degree(rng);
    std::vector<long> rts;
    QPoly p(Rat(1));
    for (int i = 0; i < deg; ++i) {
      long r = root(rng);
      rts.push_back(r);
      p = p * (QPoly::x() - QPoly(Rat(r)));
    }
    std::sort(rts.begin(), rts.end());
    rts.erase(std::unique(rts.begin(), rts.end()), rts.end());
    auto iso = isolate_roots(p, Rat(-11), Rat(11));
    REQUIRE(iso.size() == rts.size());
    for (std::size_t i = 0; i < rts.size(); ++i) {
      REQUIRE(iso[i].lo < rts[i]);
      REQUIRE(Rat(rts[i]) < iso[i].hi);
    }
  }
}

TEST_CASE("algebraic number comparison") {
  // sqrt(2) vs 3/2 vs sqrt(3)
  RealAlgebraic r2(QPoly::from_int({-2, 0, 1}), Rat(0), Rat(2));
  RealAlgebraic r3(QPoly::from_int({-3, 0, 1}), Rat(0), Rat(2));
  CHECK(r2.compare(Rat(3, 2)) < 0);
  CHECK(r3.compare(Rat(3, 2)) > 0);
  CHECK(r2.compare(r3) < 0);
  CHECK(r2.equals(RealAlgebraic(QPoly::from_int({-2, 0, 1}), Rat(1), Rat(3, 2))));
  CHECK(r2.negated().compare(Rat(-1)) < 0);
  CHECK(r2.negated().equals(r2) == false);
  CHECK(RealAlgebraic(Rat(5, 7)).rational_value() == Rat(5, 7));
}

TEST_CASE("exact two-cosine values") {
  CHECK(two_cos_two_pi(0, 1).rational_value() == 2);
  CHECK(two_cos_two_pi(1, 2).rational_value() == -2);
  CHECK(two_cos_two_pi(1, 3).rational_value() == -1);
  CHECK(two_cos_two_pi(1, 4).rational_value() == 0);
  CHECK(two_cos_two_pi(1, 6).rational_value() == 1);
  CHECK(two_cos_two_pi(2, 6).rational_value() == -1);
  CHECK(two_cos_pi_over(2).rational_value() == 0);
  CHECK(two_cos_pi_over(3).rational_value() == 1);
  // 2cos(pi/5) = golden ratio = (1+sqrt 5)/2
  RealAlgebraic phi = two_cos_pi_over(5);
  RealAlgebraic sqrt5(QPoly::from_int({-5, 0, 1}), Rat(2), Rat(3));
  CHECK(phi.compare(Rat(8, 5)) > 0);
  CHECK(phi.compare(Rat(13, 8)) < 0);
  // ordering: 2cos(2pi k/7) decreases in k
  RealAlgebraic a = two_cos_two_pi(1, 7);
  RealAlgebraic b = two_cos_two_pi(2, 7);
  RealAlgebraic c = two_cos_two_pi(3, 7);
  CHECK(b < a);
  CHECK(c < b);
  CHECK(a.compare(Rat(0)) > 0);
  CHECK(c.compare(Rat(-1)) < 0);
}
