#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "oblab/matrix.hpp"

namespace oblab {

/// Smith normal form data: left * M * right = diag(divisors), with both
/// transforms unimodular and each divisor dividing the next.
struct SnfResult {
  std::vector<Int> diag;  // length min(rows, cols), trailing zeros allowed
  IntMatrix left;         // rows x rows
  IntMatrix right;        // cols x cols

  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }

  /// Elementary divisors with unit entries dropped.
  std::vector<Int> nontrivial_divisors() const {
    std::vector<Int> out;
    for (const Int& d : diag)
      if (d != 1) out.push_back(d);
    return out;
  }
};

/// Smith normal form over Z. Pivots are chosen by minimal absolute value to
/// limit entry growth.
inline SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  // nearest quotient of x by the pivot p, so |x - q p| <= |p| / 2
  auto near_q = [](const Int& x, const Int& p) {
    Int q = x / p;
    Int r = x - q * p;
    if (r != 0 && 2 * abs(r) > abs(p)) q += sgn(r) * sgn(p);
    return q;
  };

  std::size_t t = 0;
  const std::size_t rank_bound = std::min(rows, cols);
  while (t < rank_bound) {
    // reduce until row t and column t are clear past the pivot; each round
    // re-selects the minimal-magnitude entry, so magnitudes shrink fast
    bool block_zero = false;
    for (;;) {
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!found ||
              mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        block_zero = true;
        break;
      }
      if (pi != t) {
        a.swap_rows(pi, t);
        left.swap_rows(pi, t);
      }
      if (pj != t) {
        a.swap_cols(pj, t);
        right.swap_cols(pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = near_q(a(i, t), a(t, t));
        a.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = near_q(a(t, j), a(t, t));
        a.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (block_zero) break;

    // enforce divisibility of the remaining block by the pivot
    bool restart = false;
    for (std::size_t i = t + 1; i < rows && !restart; ++i)
      for (std::size_t j = t + 1; j < cols && !restart; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.add_row(t, i, 1);
          left.add_row(t, i, 1);
          restart = true;
        }
    if (restart) continue;  // re-run elimination at the same t

    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
    ++t;
  }

  SnfResult out;
  out.diag.resize(rank_bound, Int(0));
  for (std::size_t i = 0; i < t; ++i) out.diag[i] = a(i, i);
  out.left = left;
  out.right = right;
  return out;
}

/// Oracle: k-th elementary divisor as gcd of k x k minors ratios. Intended for
/// small matrices in tests; also used by the acceptance suite.
inline std::vector<Int> elementary_divisors_minor_gcd(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<Int> dk(n + 1, Int(0));
  dk[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // gcd of all k x k minors
    Int g = 0;
    std::vector<std::size_t> rsel(k), csel(k);
    // enumerate k-subsets of rows and cols
    std::function<void(std::size_t, std::size_t)> rows_rec =
        [&](std::size_t start, std::size_t depth) {
          if (depth == k) {
            std::function<void(std::size_t, std::size_t)> cols_rec =
                [&](std::size_t cstart, std::size_t cdepth) {
                  if (cdepth == k) {
                    Int minor = determinant(m.submatrix(rsel, csel));
                    g = gcd(g, minor);
                    return;
                  }
                  for (std::size_t j = cstart; j < cols; ++j) {
                    csel[cdepth] = j;
                    cols_rec(j + 1, cdepth + 1);
                  }
                };
            cols_rec(0, 0);
            return;
          }
          for (std::size_t i = start; i < rows; ++i) {
            rsel[depth] = i;
            rows_rec(i + 1, depth + 1);
          }
        };
    rows_rec(0, 0);
    dk[k] = g;
  }
  std::vector<Int> out(n, Int(0));
  for (std::size_t k = 1; k <= n; ++k) {
    if (dk[k] == 0) break;  // rank deficient from here on
    out[k - 1] = dk[k] / dk[k - 1];
  }
  return out;
}

/// Cokernel coordinates: the class of v in coker(M) expressed in the cyclic
/// coordinates given by the SNF (entry i taken mod diag[i]; 0 divisor = Z).
inline std::vector<Int> cokernel_coordinates(const SnfResult& snf,
                                             const std::vector<Int>& v) {
  const IntMatrix& u = snf.left;
  std::vector<Int> c(u.rows(), Int(0));
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) c[i] += u(i, j) * v[j];
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int d = i < snf.diag.size() ? snf.diag[i] : Int(0);
    if (d > 0) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
      c[i] = r;
    }
  }
  return c;
}

}  // namespace oblab
