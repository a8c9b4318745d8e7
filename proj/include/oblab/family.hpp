#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oblab/seifert.hpp"

namespace oblab {

/// Universal per-crossing budget coefficient used by the obstruction
/// arithmetic.
inline const Int kBudgetUnit = 69713280;

/// Total obstruction budget at level n: kBudgetUnit * (6n + 90).
inline Int total_budget(long n) {
  if (n < 2) throw std::invalid_argument("level must be at least 2");
  return kBudgetUnit * Int(6 * n + 90);
}

/// Symmetric degree-2 Laurent family: b t^2 - (2b+2a) t + (4a+2b-1)
/// - (2b+2a) t^-1 + b t^-2. Always -1 at t = 1.
struct FamilyPolynomial {
  long a = 0;
  long b = 1;
  LaurentPoly delta;
};

inline FamilyPolynomial family_polynomial(long a, long b) {
  if (b <= 0) throw std::invalid_argument("b must be positive");
  FamilyPolynomial f;
  f.a = a;
  f.b = b;
  f.delta = LaurentPoly(
      QPoly::from_int({b, -(2 * b + 2 * a), 4 * a + 2 * b - 1,
                       -(2 * b + 2 * a), b}),
      -2);
  if (f.delta.eval(Rat(1)) != -1)
    throw std::logic_error("family polynomial must be -1 at t=1");
  return f;
}

/// The quadratic image of the family polynomial under x = t + 1/t:
/// q(x) = b x^2 - (2b+2a) x + (4a-1).
inline QPoly family_quadratic(const FamilyPolynomial& f) {
  return QPoly::from_int({4 * f.a - 1, -(2 * f.b + 2 * f.a), f.b});
}

/// Substitute x = t + 1/t into a polynomial in x, as a Laurent polynomial.
inline LaurentPoly substitute_t_plus_tinv(const QPoly& q) {
  LaurentPoly x_sub = LaurentPoly(QPoly::from_int({1, 0, 1}), -1);  // t + 1/t
  LaurentPoly out;
  LaurentPoly power = LaurentPoly::one();
  for (long i = 0; i <= q.degree(); ++i) {
    out = out + power * q.coeff(static_cast<std::size_t>(i));
    power = power * x_sub;
  }
  return out;
}

/// Certified model of a signature function: zero on [0, theta1), magnitude at
/// least lowerBoundAboveJump on (theta1, pi], scaled by a connected-sum
/// multiplicity.
struct SignatureProfile {
  AlgebraicAngle jumpAngle;  // x-coordinate 2 cos(theta1)
  long lowerBoundAboveJump = 2;
  Int multiplicity = 1;
};

/// Smallest angle theta with 2 cos(theta) a root of the family quadratic in
/// (-2, 2); errors when no unit-circle root exists.
inline AlgebraicAngle theta_one(long a, long b) {
  FamilyPolynomial f = family_polynomial(a, b);
  QPoly q = family_quadratic(f);
  // symbolic check of the substitution identity: q(t + 1/t) equals the family
  // polynomial exactly
  if (!(substitute_t_plus_tinv(q) == f.delta))
    throw std::logic_error("substitution identity failed");
  auto roots = isolate_roots(q, Rat(-2), Rat(2));
  if (roots.empty()) throw std::runtime_error("no unit-circle root");
  // q(2) = -1 < 0 forces one root above 2, so at most one root lies in
  // (-2,2); the smallest angle is the largest x
  return AlgebraicAngle{RealAlgebraic(roots.back())};
}

/// One selected index of a family: a prime, parameters (a,b), the certified
/// jump angle, and rational certificates u < x(theta1) < v bracketing it
/// inside the admissible x-interval.
struct SelectionEntry {
  long prime = 0;
  long a = 0;
  long b = 1;
  SignatureProfile profile;
  Rat cert_lo, cert_hi;  // rationals in x = 2 cos(theta) coordinates
};

struct FamilySelection {
  std::vector<SelectionEntry> entries;
};

/// Admissible x-interval for index i: angles in (pi - pi/p_{i-1}, pi - pi/p_i)
/// correspond to x in (-2cos(pi/p_i), -2cos(pi/p_{i-1})), with p_0 = 2.
inline std::pair<RealAlgebraic, RealAlgebraic> admissible_x_interval(
    long prev_prime, long prime) {
  RealAlgebraic lo =
      two_cos_pi_over(static_cast<unsigned long>(prime)).negated();
  RealAlgebraic hi =
      two_cos_pi_over(static_cast<unsigned long>(prev_prime)).negated();
  return {lo, hi};
}

namespace detail {

inline Int round_to_int(const Rat& x) {
  return floor_div((2 * x.get_num() + x.get_den()), 2 * x.get_den());
}

}  // namespace detail

/// Smallest integer strictly greater than (p/4) * totalBudget(n).
inline Int required_multiplicity(long n, long p) {
  if (n < 2) throw std::invalid_argument("level must be at least 2");
  if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
    throw std::invalid_argument("p must be an odd prime");
  Int num = Int(p) * total_budget(n);
  return floor_div(num, Int(4)) + 1;
}

/// For each prime, search (a,b) pairs whose jump angle lies certifiedly in
/// the admissible interval. The target x is approached by growing b; the
/// existence lemma is non-effective, so the search is capped.
inline FamilySelection choose_family_parameters(
    const std::vector<long>& primes, long level = 0,
    long candidate_cap = 1000000) {
  if (primes.empty()) throw std::invalid_argument("no primes given");
  long prev = 2;
  FamilySelection sel;
  for (long p : primes) {
    if (p <= prev || p % 2 == 0 || !is_prime(Int(p)))
      throw std::invalid_argument(
          "primes must be strictly increasing odd primes");
    auto [xlo, xhi] = admissible_x_interval(prev, p);
    Rat target = detail::rational_between(xlo, xhi);
    long tried = 0;
    bool found = false;
    SelectionEntry entry;
    for (long b = 1; !found; ++b) {
      // a solving q(target) = 0 approximately: a = (1 + b x(2-x)) / (4-2x)
      Rat ideal = (1 + Rat(b) * target * (2 - target)) / (4 - 2 * target);
      Int a_mid = detail::round_to_int(ideal);
      for (long off = -2; off <= 2 && !found; ++off) {
        if (++tried > candidate_cap)
          throw std::runtime_error("search cap exceeded (cap=" +
                                   std::to_string(candidate_cap) + ")");
        Int a_int = a_mid + off;
        if (!a_int.fits_slong_p()) continue;
        long a = a_int.get_si();
        if (a + b < 1) continue;  // no root in (-2,2)
        AlgebraicAngle theta;
        try {
          theta = theta_one(a, b);
        } catch (const std::runtime_error&) {
          continue;
        }
        if (xlo.compare(theta.x) < 0 && theta.x.compare(xhi) < 0) {
          entry.prime = p;
          entry.a = a;
          entry.b = b;
          entry.profile.jumpAngle = theta;
          entry.profile.multiplicity = 1;
          entry.cert_lo = detail::rational_between(xlo, theta.x);
          entry.cert_hi = detail::rational_between(theta.x, xhi);
          found = true;
        }
      }
    }
    sel.entries.push_back(std::move(entry));
    prev = p;
  }
  if (level >= 2)
    for (auto& e : sel.entries)
      e.profile.multiplicity = required_multiplicity(level, e.prime);
  return sel;
}

/// Lower bound 4N/p for the magnitude of the signature average over p-th
/// roots of unity, valid when the jump angle is certified below pi - pi/p.
inline Rat rho_lower_bound(const SignatureProfile& profile, long p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd, >= 3");
  // theta1 < pi - pi/p <=> x(theta1) > -2cos(pi/p)
  RealAlgebraic threshold =
      two_cos_pi_over(static_cast<unsigned long>(p)).negated();
  if (!(threshold.compare(profile.jumpAngle.x) < 0))
    throw std::runtime_error("jump too high");
  Rat bound(Int(4) * profile.multiplicity, Int(p));
  bound.canonicalize();
  Rat step(profile.lowerBoundAboveJump, 2);
  step.canonicalize();
  return bound * step;
}

/// True when every sample angle 2 pi k / p (k <= (p-1)/2) lies strictly below
/// the profile's jump angle, so the signature average over p-th roots of
/// unity vanishes exactly.
inline bool rho_vanishes(const SignatureProfile& profile, long p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  for (long k = 1; 2 * k <= p - 1; ++k) {
    RealAlgebraic xk = two_cos_two_pi(static_cast<unsigned long>(k),
                                      static_cast<unsigned long>(p));
    // angle 2 pi k/p < theta1 <=> 2cos(2 pi k/p) > x(theta1)
    if (!(profile.jumpAngle.x.compare(xk) < 0)) return false;
  }
  return true;
}

/// Ledger of the level-n contradiction test: per-term crossing bounds, the
/// total budget, and whether r copies of the given signature-average
/// magnitude exceed it.
struct BudgetReport {
  long n = 0;
  std::vector<Int> perTermBounds;
  Int totalBudget;
  Rat obstruction;  // r * rhoMagnitude
  bool contradiction = false;
};

inline BudgetReport case1_budget(long n, const Rat& rhoMagnitude, long r) {
  if (n < 2) throw std::invalid_argument("level must be at least 2");
  if (r < 1) throw std::invalid_argument("r must be positive");
  BudgetReport rep;
  rep.n = n;
  for (long i = 0; i < n - 1; ++i) rep.perTermBounds.push_back(6 * kBudgetUnit);
  rep.perTermBounds.push_back(96 * kBudgetUnit);
  Int sum = 0;
  for (const Int& t : rep.perTermBounds) sum += t;
  rep.totalBudget = total_budget(n);
  if (sum != rep.totalBudget)
    throw std::logic_error("per-term bounds do not sum to the budget");
  rep.obstruction = Rat(r) * rhoMagnitude;
  rep.contradiction = rep.obstruction > Rat(rep.totalBudget);
  return rep;
}

}  // namespace oblab
