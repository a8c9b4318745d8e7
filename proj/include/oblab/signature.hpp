#pragma once

#include <stdexcept>

#include "oblab/matrix.hpp"

namespace oblab {

/// Signature (#positive - #negative eigenvalues) of a symmetric rational
/// matrix, by congruence diagonalization. Exact; no floating point.
inline long symmetric_signature(const RatMatrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("matrix not symmetric");
  const std::size_t n = s.rows();
  RatMatrix a = s;
  long pos = 0, neg = 0;
  std::size_t k = 0;
  while (k < n) {
    if (a(k, k) == 0) {
      // bring a nonzero diagonal entry to position k if possible
      std::size_t d = k;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        a.swap_rows(k, d);
        a.swap_cols(k, d);
      } else {
        // all-zero diagonal: find off-diagonal pivot a(i,j) != 0
        bool found = false;
        std::size_t fi = k, fj = k;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (a(i, j) != 0) {
              fi = i;
              fj = j;
              found = true;
            }
        if (!found) break;  // trailing block zero: no further contribution
        // row/col i += row/col j turns the hyperbolic pair into a diagonal one
        a.add_row(fi, fj, Rat(1));
        a.add_col(fi, fj, Rat(1));
        if (fi != k) {
          a.swap_rows(k, fi);
          a.swap_cols(k, fi);
        }
      }
      continue;
    }
    const Rat d = a(k, k);
    if (d > 0)
      ++pos;
    else
      ++neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / d;
      a.add_row(i, k, -f);
      a.add_col(i, k, -f);
    }
    ++k;
  }
  return pos - neg;
}

inline long symmetric_signature(const IntMatrix& s) {
  return symmetric_signature(to_rational(s));
}

}  // namespace oblab
