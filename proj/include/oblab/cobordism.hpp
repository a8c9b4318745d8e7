#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "oblab/branched_cover.hpp"
#include "oblab/seifert.hpp"
#include "oblab/signature.hpp"

namespace oblab {

/// Homology class of the surgery curve v_i (1 <= i <= 4m-6) in the meridian
/// basis x_1..x_{2m-2}: v_{3m-5} = x_1, v_i = 0 for i >= 3m-4, and
/// v_i = x_o + x_e (o odd, e even) for i <= 3m-6.
inline std::vector<Int> curve_class(long m, long i, long o, long e) {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  if (i < 1 || i > 4 * m - 6) throw std::invalid_argument("curve index");
  std::vector<Int> v(2 * m - 2, 0);
  if (i == 3 * m - 5) {
    v[0] = 1;
  } else if (i <= 3 * m - 6) {
    if (o < 1 || o > 2 * m - 2 || o % 2 == 0)
      throw std::invalid_argument("o must be an odd meridian index");
    if (e < 1 || e > 2 * m - 2 || e % 2 == 1)
      throw std::invalid_argument("e must be an even meridian index");
    v[o - 1] += 1;
    v[e - 1] += 1;
  }
  return v;
}

/// Coefficient a_i: 2^m - 1 for i <= 3m-5, else 1.
inline Int curve_coefficient(long m, long i) {
  if (i < 1 || i > 4 * m - 6) throw std::invalid_argument("curve index");
  return i <= 3 * m - 5 ? mersenne_c(m) : Int(1);
}

namespace detail {

inline Rat bilinear(const RatMatrix& Pinv, const std::vector<Int>& a,
                    const std::vector<Int>& b) {
  Rat s = 0;
  long n = static_cast<long>(Pinv.rows());
  for (long i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < n; ++j)
      if (b[j] != 0) s += Rat(a[i]) * Pinv(i, j) * Rat(b[j]);
  }
  return s;
}

}  // namespace detail

/// Linking number of v_i with a (-1)-framed pushoff of v_j in the cover:
/// -delta_ij - R(class(v_i), class(v_j)).
inline Rat lk_sigma(const SurgeryLinkingData& d, long i, long j, long o = 1,
                    long e = 2) {
  Rat r = -detail::bilinear(d.Pinv, curve_class(d.m, i, o, e),
                            curve_class(d.m, j, o, e));
  if (i == j) r -= 1;
  return r;
}

struct ConditionOneReport {
  Rat sum;
  long nonzeroTerms = 0;
  bool verdict = false;  // sum == -m
};

/// Double sum of lk over i, j in [3m-5, 4m-6]; must equal -m with exactly
/// the m diagonal terms nonzero.
inline ConditionOneReport condition_one(long m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd, >= 3");
  SurgeryLinkingData d = surgery_linking_data(m);
  ConditionOneReport rep;
  for (long i = 3 * m - 5; i <= 4 * m - 6; ++i)
    for (long j = 3 * m - 5; j <= 4 * m - 6; ++j) {
      Rat v = lk_sigma(d, i, j);
      if (v != 0) ++rep.nonzeroTerms;
      rep.sum += v;
    }
  rep.verdict = (rep.sum == Rat(-m));
  return rep;
}

namespace detail {

inline Int exact_int(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() != 1)
    throw std::logic_error("expected an integer intersection number");
  return c.get_num();
}

/// E_i . E_0 = q * a_i * sum_j lk(v_i, v_j') over j in [3m-5, 4m-6], and
/// E_i . E_i = a_i^2 * lk(v_i, v_i'); both are integers.
inline std::pair<Int, Int> chain_pairings(const SurgeryLinkingData& d, long i,
                                          long o, long e) {
  long m = d.m;
  Int q = mersenne_c(m);
  Int ai = curve_coefficient(m, i);
  Rat row = 0;
  for (long j = 3 * m - 5; j <= 4 * m - 6; ++j) row += lk_sigma(d, i, j, o, e);
  Int lhs = exact_int(Rat(q) * Rat(ai) * row);
  Int rhs = exact_int(Rat(ai * ai) * lk_sigma(d, i, i, o, e));
  return {lhs, rhs};
}

}  // namespace detail

struct ConditionTwoReport {
  bool allAssignments = false;     // every (o, e) with o odd, e even
  bool restrictedFamilies = false; // (2k-1, 2k+2) and (2k+1, 2k) only
  long assignmentsChecked = 0;
  bool topRangeValues = false;     // i >= 3m-4 gives (1-2^m, -1)
};

/// The mod-2 congruence E_i . E_0 = E_i . E_i for every curve, quantified
/// over every admissible class assignment of the low curves.
inline ConditionTwoReport condition_two(long m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd, >= 3");
  SurgeryLinkingData d = surgery_linking_data(m);
  Int q = mersenne_c(m);
  ConditionTwoReport rep;
  rep.topRangeValues = true;
  for (long i = 3 * m - 5; i <= 4 * m - 6; ++i) {
    auto [lhs, rhs] = detail::chain_pairings(d, i, 1, 2);
    if ((lhs - rhs) % 2 != 0) return rep;
    if (i >= 3 * m - 4 && !(lhs == 1 - pow2(m) && rhs == -1))
      rep.topRangeValues = false;
    if (i == 3 * m - 5 && !(lhs == -q * q && rhs == -q * q))
      rep.topRangeValues = false;
  }
  // low curves: the congruence depends only on (o, e), not on i
  bool all = (3 * m - 6 >= 1);
  for (long o = 1; o <= 2 * m - 3; o += 2)
    for (long e = 2; e <= 2 * m - 2; e += 2) {
      ++rep.assignmentsChecked;
      auto [lhs, rhs] = detail::chain_pairings(d, 1, o, e);
      if ((lhs - rhs) % 2 != 0) all = false;
    }
  rep.allAssignments = all;
  bool restricted = all;
  for (long k = 1; k <= m - 2; ++k) {
    auto [l1, r1] = detail::chain_pairings(d, 1, 2 * k - 1, 2 * k + 2);
    auto [l2, r2] = detail::chain_pairings(d, 1, 2 * k + 1, 2 * k);
    if ((l1 - r1) % 2 != 0 || (l2 - r2) % 2 != 0) restricted = false;
  }
  rep.restrictedFamilies = restricted;
  return rep;
}

struct CharacteristicReport {
  Int e00;                    // E_0 . E_0
  bool squareOk = false;      // e00 == -(2^m-1)^2 m
  bool paritiesOk = false;    // E_i . E_0 = E_i . E_i mod 2 for all i, (o,e)
  bool parityColumnOk = false;  // first column of q Pinv alternates parity
  Rat wHatSquare;             // e00 / (2^m-1)^2 = -m
};

inline CharacteristicReport characteristic_check(long m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd, >= 3");
  SurgeryLinkingData d = surgery_linking_data(m);
  Int q = mersenne_c(m);
  CharacteristicReport rep;
  // E_0 . E_0: coefficient q on every chain in the range, so the double sum
  // of condition_one scaled by q^2
  Rat s = 0;
  for (long i = 3 * m - 5; i <= 4 * m - 6; ++i)
    for (long j = 3 * m - 5; j <= 4 * m - 6; ++j) s += lk_sigma(d, i, j);
  rep.e00 = detail::exact_int(Rat(q * q) * s);
  rep.squareOk = (rep.e00 == -q * q * Int(m));
  rep.wHatSquare = Rat(rep.e00, q * q);
  rep.wHatSquare.canonicalize();
  ConditionTwoReport two = condition_two(m);
  rep.paritiesOk = two.allAssignments && two.topRangeValues;
  // parity pattern of the first column of q Pinv: even at odd meridian
  // indices (starting from zero), odd at even ones
  rep.parityColumnOk = true;
  for (long r = 0; r < 2 * m - 2; ++r) {
    Int entry = detail::exact_int(Rat(q) * d.Pinv(r, 0));
    bool shouldBeEven = (r % 2 == 0);  // rows 0,2,... are odd meridian labels
    if ((entry % 2 == 0) != shouldBeEven) rep.parityColumnOk = false;
  }
  return rep;
}

/// Betti-number and signature bookkeeping across the cobordism pieces.
struct LedgerReport {
  long m = 0;
  Rat signW0;
  long b2W0 = 0;
  long b2Wprime = 0, signWprime = 0;
  long b2What = 0, signWhat = 0;
  long b2W = 0, signW = 0;
  bool negativeDefinite = false;  // sign(W) == -b2(W)
};

inline LedgerReport ledger(long m, const SeifertMatrix& k0) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd, >= 3");
  LedgerReport rep;
  rep.m = m;
  // sign(W0): sum of the signature function of the companion-cover knot over
  // the m-th roots of unity
  for (long k = 1; k < m; ++k) rep.signW0 += levine_tristram(k0, k, m);
  rep.b2W0 = 2 * m - 2;
  // intersection form of W': two fixed 2x2 blocks plus (m-3) diagonal [3]
  long n = m + 1;
  RatMatrix form(n, n);
  form(0, 0) = 1;
  form(0, 1) = 3;
  form(1, 0) = 3;
  form(1, 1) = 2;
  form(2, 2) = 3;
  form(2, 3) = 3;
  form(3, 2) = 3;
  form(3, 3) = 1;
  for (long i = 4; i < n; ++i) form(i, i) = 3;
  rep.b2Wprime = n;
  rep.signWprime = symmetric_signature(form);
  // blow-downs: 4m-6 copies of [-1]
  rep.b2What = rep.b2Wprime + (4 * m - 6);
  rep.signWhat = rep.signWprime - (4 * m - 6);
  if (rep.signW0 != 0)
    throw std::logic_error("companion knot signature sum must vanish");
  // additivity along Sigma_m splits What into W and W0
  rep.b2W = rep.b2What - rep.b2W0;
  rep.signW = rep.signWhat;  // minus sign(W0), which is zero
  rep.negativeDefinite = (rep.signW == -rep.b2W);
  return rep;
}

/// Default companion-cover knot: the positively-clasped doubled knot with
/// Seifert matrix [[0,2],[1,0]].
inline SeifertMatrix ledger_default_knot() {
  return SeifertMatrix(IntMatrix{{0, 2}, {1, 0}});
}

inline LedgerReport ledger(long m) { return ledger(m, ledger_default_knot()); }

}  // namespace oblab
