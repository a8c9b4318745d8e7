#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oblab {

using Int = mpz_class;
using Rat = mpq_class;

/// Unique representative of q mod 1 in [0,1).
inline Rat rational_mod_Z(const Rat& q) {
  Int num = q.get_num();
  Int den = q.get_den();  // den > 0, canonical
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rat out(r, den);
  out.canonicalize();
  return out;
}

inline bool is_integer(const Rat& q) {
  Rat c = q;
  c.canonicalize();  // mpq_class does not canonicalize two-arg construction
  return c.get_den() == 1;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

/// m = p^k for some prime p, k >= 1.
inline bool is_prime_power(const Int& m) {
  if (m < 2) return false;
  Int n = m;
  // find smallest prime factor by trial division (inputs here are small)
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // m itself prime
}

inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace oblab
