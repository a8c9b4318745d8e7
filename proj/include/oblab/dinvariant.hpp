#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "oblab/branched_cover.hpp"
#include "oblab/cobordism.hpp"
#include "oblab/rational.hpp"

namespace oblab {

/// Correction term of the lens space L(p,q) at spin-c index i, by the
/// recursion d(p,q,i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(q, p mod q, i mod q)
/// with d(S^3) = 0. Index convention calibrated so that the spin structure
/// of L(3,1) has value 1/2.
inline Rat lens_d(long p, long q, long i) {
  if (p < 1 || q < 0 || (p > 1 && (q < 1 || q >= p)) || i < 0 || i >= p)
    throw std::invalid_argument("need 0 < q < p and 0 <= i < p");
  if (p > 1 && gcd(Int(p), Int(q)) != 1)
    throw std::invalid_argument("p and q must be coprime");
  if (p == 1) return Rat(0);

  static std::map<std::tuple<long, long, long>, Rat> cache;
  static std::mutex cacheMutex;
  std::tuple<long, long, long> key{p, q, i};
  {
    std::lock_guard<std::mutex> lock(cacheMutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Rat term(Int(2 * i + 1 - p - q) * Int(2 * i + 1 - p - q) - Int(p) * Int(q),
           4 * Int(p) * Int(q));
  term.canonicalize();
  Rat value = term - lens_d(q, p % q, i % q);
  std::lock_guard<std::mutex> lock(cacheMutex);
  cache.emplace(key, value);
  return value;
}

/// Spin-c indices fixed by conjugation i -> p + q - 1 - i (mod p). For odd p
/// the unique solution of 2i = p + q - 1 (mod p); for even p both solutions.
struct SpinIndexResult {
  std::vector<long> indices;
  bool unique = false;
};

inline SpinIndexResult spin_index(long p, long q) {
  if (p == 1) return SpinIndexResult{{0}, true};
  if (q < 1 || q >= p || gcd(Int(p), Int(q)) != 1)
    throw std::invalid_argument("need 0 < q < p coprime");
  SpinIndexResult r;
  long target = ((p + q - 1) % p + p) % p;
  for (long i = 0; i < p; ++i)
    if ((2 * i) % p == target) r.indices.push_back(i);
  r.unique = (p % 2 == 1);
  return r;
}

/// Conjugate index under the recursion's labeling.
inline long conjugate_index(long p, long q, long i) {
  return ((p + q - 1 - i) % p + p) % p;
}

/// True when the group element lies in the Hermite-form subgroup generated
/// by (d1, 0) and (c, d2) inside Z_q (+) Z_q.
inline bool metabolizer_contains(const Metabolizer& met, const Int& q,
                                 const Int& x1, const Int& x2) {
  Int d1 = met.gen1[0], c = met.gen2[0], d2 = met.gen2[1];
  if (met.gen1[1] != 0 || d1 * d2 != q)
    throw std::invalid_argument("metabolizer not in Hermite form");
  if (x2 % d2 != 0) return false;
  return ((x1 - (x2 / d2) * c) % d1) == 0;
}

struct ObstructionVerdict {
  bool x1InMetabolizer = false;
  bool contradiction = false;  // negative d-value forced on a kernel element
};

/// The endgame test: a strictly negative d-value at the class x1 contradicts
/// the nonnegativity forced on metabolizer elements, provided x1 lies in the
/// metabolizer.
inline ObstructionVerdict obstruction_check(long m, const Metabolizer& met,
                                            const Rat& dValue) {
  ObstructionVerdict v;
  v.x1InMetabolizer = metabolizer_contains(met, mersenne_c(m), 1, 0);
  v.contradiction = v.x1InMetabolizer && dValue < 0;
  return v;
}

/// The assembled uniform bound: (m-3) copies of the lens value 1/2 plus the
/// two boundary constants against the characteristic-square inequality.
struct TheoremAssembly {
  long m = 0;
  Rat dL31;       // recomputed from the recursion
  Rat dA;         // boundary constant -3/2
  Rat dBbound;    // boundary constant 3/4
  Rat ymBound;    // (m-3) dL31 + dA + dBbound = (2m-9)/4
  Rat c1Square;   // -m, from the characteristic-class verification
  long b2 = 0;    // 3m-3, from the cobordism ledger
  Rat rhsBound;   // (c1Square + b2)/4 = (2m-3)/4
  Rat finalBound; // ymBound - rhsBound = -3/2
  bool hypothesisOk = false;  // m an odd prime power
};

inline TheoremAssembly theorem_assembly(long m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd, >= 3");
  TheoremAssembly t;
  t.m = m;
  t.hypothesisOk = is_prime_power(Int(m));
  long spin31 = spin_index(3, 1).indices.at(0);
  t.dL31 = lens_d(3, 1, spin31);
  t.dA = Rat(-3, 2);
  t.dA.canonicalize();
  t.dBbound = Rat(3, 4);
  t.dBbound.canonicalize();
  t.ymBound = Rat(m - 3) * t.dL31 + t.dA + t.dBbound;

  CharacteristicReport ch = characteristic_check(m);
  if (!ch.squareOk || !ch.paritiesOk)
    throw std::logic_error("characteristic-class verification failed");
  t.c1Square = ch.wHatSquare;
  LedgerReport led = ledger(m);
  if (!led.negativeDefinite)
    throw std::logic_error("cobordism ledger verification failed");
  t.b2 = led.b2W;
  t.rhsBound = (t.c1Square + Rat(t.b2)) / 4;
  t.rhsBound.canonicalize();
  t.finalBound = t.ymBound - t.rhsBound;
  return t;
}

}  // namespace oblab
