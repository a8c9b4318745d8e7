#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oblab/matrix.hpp"
#include "oblab/rational.hpp"
#include "oblab/snf.hpp"

namespace oblab {

/// A_r = [[0, 2^r], [1, 0]]; satisfies A_r^2 = 2^r I.
inline IntMatrix block_A(long r) {
  IntMatrix a(2, 2);
  a(0, 1) = pow2(r);
  a(1, 0) = 1;
  return a;
}

/// c_r = 2^r - 1.
inline Int mersenne_c(long r) { return pow2(r) - 1; }

/// The 2(m-1)-square surgery linking matrix: block tridiagonal with 3*A_0 on
/// the diagonal and -A_1 / -A_1^T on the off-diagonals.
inline IntMatrix build_P(long m) {
  if (m < 2) throw std::invalid_argument("cover degree must be at least 2");
  long blocks = m - 1;
  IntMatrix P(2 * blocks, 2 * blocks);
  IntMatrix d = block_A(0);
  IntMatrix o = block_A(1);
  for (long i = 0; i < blocks; ++i)
    for (long r = 0; r < 2; ++r)
      for (long c = 0; c < 2; ++c) {
        P(2 * i + r, 2 * i + c) = 3 * d(r, c);
        if (i + 1 < blocks) {
          P(2 * i + r, 2 * (i + 1) + c) = -o(r, c);
          P(2 * (i + 1) + r, 2 * i + c) = -o(c, r);
        }
      }
  return P;
}

/// Closed-form inverse of build_P(m): for k >= l the (k,l) block is
/// (c_l * c_{m-k} / (2^m - 1)) * A_{k-l}, and the upper blocks follow by
/// symmetry with transposed A factors. Blocks are indexed from 1.
inline RatMatrix closed_form_inverse(long m) {
  if (m < 2) throw std::invalid_argument("cover degree must be at least 2");
  long blocks = m - 1;
  RatMatrix Pinv(2 * blocks, 2 * blocks);
  Int q = mersenne_c(m);
  for (long k = 1; k <= blocks; ++k)
    for (long l = 1; l <= blocks; ++l) {
      bool lower = k >= l;
      long kk = lower ? k : l;
      long ll = lower ? l : k;
      IntMatrix a = block_A(kk - ll);
      Rat scale(mersenne_c(ll) * mersenne_c(m - kk), q);
      scale.canonicalize();
      for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c)
          Pinv(2 * (k - 1) + r, 2 * (l - 1) + c) =
              scale * Rat(lower ? a(r, c) : a(c, r));
    }
  return Pinv;
}

struct SurgeryLinkingData {
  long m = 0;
  IntMatrix P;
  RatMatrix Pinv;
};

inline SurgeryLinkingData surgery_linking_data(long m) {
  return SurgeryLinkingData{m, build_P(m), closed_form_inverse(m)};
}

/// Exact checks: A_r^2 = 2^r I for r < m, Pinv * P = I, P symmetric, and
/// (2^m - 1) * Pinv integral.
inline bool verify_inverse(long m) {
  if (m < 2) throw std::invalid_argument("cover degree must be at least 2");
  for (long r = 0; r < m; ++r) {
    IntMatrix a = block_A(r);
    IntMatrix sq = a * a;
    if (!(sq(0, 0) == pow2(r) && sq(1, 1) == pow2(r) && sq(0, 1) == 0 &&
          sq(1, 0) == 0))
      return false;
  }
  SurgeryLinkingData d = surgery_linking_data(m);
  long n = d.P.rows();
  Int q = mersenne_c(m);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (d.P(i, j) != d.P(j, i)) return false;
      if (!is_integer(Rat(q) * d.Pinv(i, j))) return false;
      Rat s = 0;
      for (long k = 0; k < n; ++k) s += d.Pinv(i, k) * Rat(d.P(k, j));
      if (s != (i == j ? Rat(1) : Rat(0))) return false;
    }
  return true;
}

/// H_1 of the m-fold cover: two cyclic summands of order q = 2^m - 1, with a
/// linking form on the distinguished classes x1 (the first meridian) and x2
/// (an SNF generator corrected to have zero self-linking).
struct TorsionFormGroup {
  long m = 0;
  Int q;                       // order of each cyclic summand
  std::vector<Int> divisors;   // full elementary divisor list of P
  IntMatrix formNumerator;     // 2x2; linking form = formNumerator / q mod Z
  std::vector<Int> x1, x2;     // integer lifts in meridian coordinates
  bool x2Corrected = false;    // raw SNF generator had nonzero self-linking
};

namespace detail {

/// -a^T Pinv b reduced into [0,1).
inline Rat linking_value(const RatMatrix& Pinv, const std::vector<Int>& a,
                         const std::vector<Int>& b) {
  Rat s = 0;
  long n = Pinv.rows();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) s += Rat(a[i]) * Pinv(i, j) * Rat(b[j]);
  return rational_mod_Z(-s);
}

}  // namespace detail

inline TorsionFormGroup homology(long m) {
  SurgeryLinkingData d = surgery_linking_data(m);
  long n = d.P.rows();
  SnfResult snf = smith_normal_form(d.P);
  TorsionFormGroup g;
  g.m = m;
  g.q = mersenne_c(m);
  g.divisors = snf.diag;
  for (long i = 0; i < n - 2; ++i)
    if (snf.diag[i] != 1)
      throw std::logic_error("unexpected elementary divisors");
  if (snf.diag[n - 2] != g.q || snf.diag[n - 1] != g.q)
    throw std::logic_error("unexpected torsion orders");

  // generators of the two torsion summands: columns n-2 and n-1 of U^{-1}
  RatMatrix Uinv = inverse(to_rational(snf.left));
  auto gen = [&](long col) {
    std::vector<Int> v(n);
    for (long i = 0; i < n; ++i) {
      if (!is_integer(Uinv(i, col))) throw std::logic_error("U not unimodular");
      Rat e = Uinv(i, col);
      e.canonicalize();
      v[i] = e.get_num();
    }
    return v;
  };
  std::vector<Int> g1 = gen(n - 2), g2 = gen(n - 1);

  // x1 = class of the first meridian
  g.x1.assign(n, 0);
  g.x1[0] = 1;
  if (detail::linking_value(d.Pinv, g.x1, g.x1) != 0)
    throw std::logic_error("first meridian has nonzero self-linking");

  // pick the SNF generator whose pairing with x1 is a unit mod q, then
  // correct its self-linking by a multiple of x1
  auto numerator = [&](const Rat& v) {
    Rat scaled = v * Rat(g.q);
    scaled.canonicalize();
    if (scaled.get_den() != 1) throw std::logic_error("pairing not over q");
    return scaled.get_num();
  };
  for (const std::vector<Int>* cand : {&g1, &g2}) {
    Int n12 = numerator(detail::linking_value(d.Pinv, g.x1, *cand));
    Int inv2n12;
    if (mpz_invert(inv2n12.get_mpz_t(), Int(2 * n12).get_mpz_t(),
                   g.q.get_mpz_t()) == 0)
      continue;  // pairing with x1 is not a unit: try the other generator
    Int n22 = numerator(detail::linking_value(d.Pinv, *cand, *cand));
    Int s = ((-n22 * inv2n12) % g.q + g.q) % g.q;
    g.x2.assign(n, 0);
    for (long i = 0; i < n; ++i) g.x2[i] = (*cand)[i] + s * g.x1[i];
    g.x2Corrected = (s != 0);
    break;
  }
  if (g.x2.empty())
    throw std::logic_error("no complementary generator pairs invertibly");

  g.formNumerator = IntMatrix(2, 2);
  const std::vector<Int>* xs[2] = {&g.x1, &g.x2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      g.formNumerator(i, j) =
          numerator(detail::linking_value(d.Pinv, *xs[i], *xs[j]));
  if (g.formNumerator(0, 0) != 0 || g.formNumerator(1, 1) != 0)
    throw std::logic_error("distinguished classes must have zero self-linking");
  return g;
}

/// Elementary divisors of the cover homology computed from a Seifert matrix:
/// cokernel of V (x) C - V^T (x) I with C the companion matrix of
/// 1 + t + ... + t^{m-1}.
inline std::vector<Int> homology_via_seifert(const IntMatrix& V, long m) {
  if (m < 2) throw std::invalid_argument("cover degree must be at least 2");
  long g = V.rows();
  long d = m - 1;
  IntMatrix C(d, d);
  for (long i = 0; i + 1 < d; ++i) C(i + 1, i) = 1;
  for (long i = 0; i < d; ++i) C(i, d - 1) = -1;
  IntMatrix K(g * d, g * d);
  for (long a = 0; a < g; ++a)
    for (long b = 0; b < g; ++b)
      for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
          K(a * d + i, b * d + j) =
              V(a, b) * C(i, j) - (i == j ? V(b, a) : Int(0));
  return smith_normal_form(K).nontrivial_divisors();
}

/// A presentation of Z_q (+) Z_q with linking form M / q on the basis.
struct LinkingGroup {
  Int q;
  IntMatrix M;  // 2x2 integer numerators; symmetric mod q
};

inline LinkingGroup linking_group(const TorsionFormGroup& g) {
  return LinkingGroup{g.q, g.formNumerator};
}

/// An order-q self-annihilating subgroup, by Hermite-form generators.
struct Metabolizer {
  std::array<Int, 2> gen1, gen2;
  std::string label;  // "<x1>", "<x2>", or "" when neither
};

namespace detail {

/// Number of solutions in (Z_q)^2 of N x = 0 mod q.
inline Int kernel_size_mod(const IntMatrix& N, const Int& q) {
  SnfResult snf = smith_normal_form(N);
  Int count = 1;
  for (const Int& s : snf.diag) count *= gcd(s, q);
  return count;
}

inline Int mod_q(const Int& v, const Int& q) { return ((v % q) + q) % q; }

}  // namespace detail

/// All metabolizers: subgroups of order q with vanishing form that equal
/// their own annihilator. Enumerates the Hermite-form triples d1*d2 = q,
/// 0 <= c < d1.
inline std::vector<Metabolizer> metabolizers(const LinkingGroup& g) {
  std::vector<Metabolizer> out;
  std::vector<Int> divs;
  for (Int d = 1; d * d <= g.q; ++d)
    if (g.q % d == 0) {
      divs.push_back(d);
      if (d * d != g.q) divs.push_back(g.q / d);
    }
  for (const Int& d1 : divs) {
    Int d2 = g.q / d1;
    for (Int c = 0; c < d1; ++c) {
      std::array<Int, 2> u = {d1, Int(0)};
      std::array<Int, 2> v = {c, d2};
      auto pair_num = [&](const std::array<Int, 2>& a,
                          const std::array<Int, 2>& b) {
        Int s = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) s += a[i] * g.M(i, j) * b[j];
        return detail::mod_q(s, g.q);
      };
      if (pair_num(u, u) != 0 || pair_num(u, v) != 0 || pair_num(v, v) != 0)
        continue;
      // annihilator size: solutions of (M u)^T x = (M v)^T x = 0 mod q
      IntMatrix N(2, 2);
      for (int i = 0; i < 2; ++i) {
        N(0, i) = g.M(i, 0) * u[0] + g.M(i, 1) * u[1];
        N(1, i) = g.M(i, 0) * v[0] + g.M(i, 1) * v[1];
      }
      if (detail::kernel_size_mod(N, g.q) != g.q) continue;
      Metabolizer met;
      met.gen1 = u;
      met.gen2 = v;
      if (d1 == 1)
        met.label = "<x1>";
      else if (d1 == g.q && c == 0)
        met.label = "<x2>";
      out.push_back(std::move(met));
    }
  }
  return out;
}

/// Brute-force oracle for small q: enumerate subgroups as element sets.
inline std::vector<std::set<std::array<long, 2>>> brute_metabolizers(
    long q, const IntMatrix& M) {
  auto pair_zero = [&](long a0, long a1, long b0, long b1) {
    Int s = M(0, 0) * a0 * b0 + M(0, 1) * a0 * b1 + M(1, 0) * a1 * b0 +
            M(1, 1) * a1 * b1;
    return s % q == 0;
  };
  // cyclic subgroups and pairwise joins
  std::set<std::set<std::array<long, 2>>> subgroups;
  std::vector<std::set<std::array<long, 2>>> cyclic;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) {
      std::set<std::array<long, 2>> s;
      long x = 0, y = 0;
      do {
        s.insert({x, y});
        x = (x + a) % q;
        y = (y + b) % q;
      } while (x != 0 || y != 0);
      if (subgroups.insert(s).second) cyclic.push_back(s);
    }
  for (std::size_t i = 0; i < cyclic.size(); ++i)
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      std::set<std::array<long, 2>> s;
      for (const auto& a : cyclic[i])
        for (const auto& b : cyclic[j])
          s.insert({(a[0] + b[0]) % q, (a[1] + b[1]) % q});
      subgroups.insert(s);
    }
  std::vector<std::set<std::array<long, 2>>> out;
  for (const auto& s : subgroups) {
    if (static_cast<long>(s.size()) != q) continue;
    bool iso = true;
    for (const auto& a : s)
      for (const auto& b : s)
        if (!pair_zero(a[0], a[1], b[0], b[1])) {
          iso = false;
          break;
        }
    if (!iso) continue;
    // annihilator must not exceed the subgroup
    long perp = 0;
    for (long x = 0; x < q && iso; ++x)
      for (long y = 0; y < q; ++y) {
        bool ann = true;
        for (const auto& a : s)
          if (!pair_zero(x, y, a[0], a[1])) {
            ann = false;
            break;
          }
        if (ann) ++perp;
      }
    if (perp != q) continue;
    out.push_back(s);
  }
  return out;
}

/// Metabolizer search guarded by the square-order precondition.
struct MetabolizerReport {
  std::vector<Metabolizer> list;
  std::string reason;  // nonempty when the search was not applicable
};

inline MetabolizerReport metabolizer_report(const std::vector<Int>& divisors,
                                            const LinkingGroup& g) {
  Int order = 1;
  for (const Int& d : divisors) order *= d;
  if (mpz_perfect_square_p(order.get_mpz_t()) == 0)
    return MetabolizerReport{{}, "group order not a perfect square"};
  return MetabolizerReport{metabolizers(g), ""};
}

struct CoprimalityCertificate {
  Int gcdValue;
  bool coprime = false;
  bool withinHypothesis = false;
  std::string note;
};

/// gcd(p, 2^m - 1) with the lemma-hypothesis flag p <= m (both prime).
inline CoprimalityCertificate mersenne_coprime(long p, long m) {
  CoprimalityCertificate c;
  c.gcdValue = gcd(Int(p), mersenne_c(m));
  c.coprime = (c.gcdValue == 1);
  c.withinHypothesis = is_prime(Int(p)) && is_prime(Int(m)) && p <= m;
  if (!c.withinHypothesis) c.note = "outside lemma hypothesis";
  return c;
}

/// 2 * 2^{m-1} reduced mod the given modulus.
inline Int spinc_residue(long m, const Int& modulus) {
  Int v = 2 * pow2(m - 1);
  return ((v % modulus) + modulus) % modulus;
}

/// Doubling the half-order class returns the generator: 2 * 2^{m-1} = 1 mod
/// (2^m - 1).
inline bool spinc_offset_check(long m) {
  if (m < 2) throw std::invalid_argument("cover degree must be at least 2");
  return spinc_residue(m, mersenne_c(m)) == 1;
}

}  // namespace oblab
