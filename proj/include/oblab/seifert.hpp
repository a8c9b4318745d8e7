#pragma once

#include <stdexcept>
#include <vector>

#include "oblab/algebraic.hpp"
#include "oblab/laurent.hpp"
#include "oblab/matrix.hpp"
#include "oblab/signature.hpp"

namespace oblab {

/// Square integer matrix V of even size with V - V^T unimodular.
struct SeifertMatrix {
  IntMatrix V;

  SeifertMatrix() {}
  explicit SeifertMatrix(IntMatrix v) : V(std::move(v)) {
    if (!V.is_square()) throw std::invalid_argument("Seifert matrix not square");
    if (V.rows() % 2 != 0)
      throw std::invalid_argument("Seifert matrix size must be even");
    if (abs(determinant(V - V.transpose())) != 1)
      throw std::invalid_argument("V - V^T must be unimodular");
  }

  std::size_t size() const { return V.rows(); }
};

inline SeifertMatrix connected_sum(const SeifertMatrix& a,
                                   const SeifertMatrix& b) {
  return SeifertMatrix(IntMatrix::block_sum(a.V, b.V));
}

inline SeifertMatrix mirror(const SeifertMatrix& v) {
  return SeifertMatrix(-v.V.transpose());
}

/// det(tV - V^T) centered as a symmetric Laurent polynomial with value +-1
/// at t = 1. Computed by evaluation and Lagrange interpolation.
inline LaurentPoly alexander_polynomial(const SeifertMatrix& sm) {
  const std::size_t n = sm.size();
  if (n == 0) return LaurentPoly::one();
  const IntMatrix& v = sm.V;
  IntMatrix vt = v.transpose();
  std::vector<Rat> xs, ys;
  for (std::size_t p = 0; p <= n; ++p) {
    Rat t(static_cast<long>(p));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = t * Rat(v(i, j)) - Rat(vt(i, j));
    xs.push_back(t);
    ys.push_back(determinant(m));
  }
  QPoly p;
  for (std::size_t i = 0; i <= n; ++i) {
    QPoly li(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      li = li * (QPoly::x() - QPoly(xs[j]));
      denom *= xs[i] - xs[j];
    }
    p = p + li * (ys[i] / denom);
  }
  LaurentPoly delta(p, -static_cast<long>(n / 2));
  if (!delta.is_symmetric())
    throw std::logic_error("Alexander polynomial failed symmetry check");
  Rat at_one = delta.eval(Rat(1));
  if (at_one != 1 && at_one != -1)
    throw std::logic_error("Alexander polynomial not +-1 at t=1");
  return delta;
}

/// Fold of a symmetric Laurent polynomial through x = t + 1/t: returns q with
/// q(2 cos s) = f(e^{is}).
inline QPoly signature_fold(const LaurentPoly& f) {
  if (!f.is_symmetric()) throw std::invalid_argument("fold of asymmetric poly");
  QPoly q(f.coeff(0));
  for (long j = 1; j <= f.high(); ++j)
    q = q + two_cos_multiple(static_cast<std::size_t>(j)) * f.coeff(j);
  return q;
}

namespace detail {

inline int descartes_variations(const std::vector<Rat>& c) {
  int v = 0, last = 0;
  for (const Rat& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

/// Signature of (1-w)V + (1-conj(w))V^T at w = e^{is} with 2 cos s = c,
/// c rational in (-2, 2), assuming the form is nonsingular there. Exact:
/// works in Q[w]/(w^2 - cw + 1) and counts real-rooted characteristic
/// polynomial signs by Descartes' rule.
inline long seifert_form_signature(const IntMatrix& v, const Rat& c) {
  const std::size_t n = v.rows();
  if (n == 0) return 0;
  if (!(Rat(-2) < c && c < Rat(2)))
    throw std::invalid_argument("sample point must be in (-2,2)");
  struct Quad {
    Rat a, b;  // a + b w
  };
  auto mul = [&c](const Quad& x, const Quad& y) {
    Rat bb = x.b * y.b;  // w^2 = c w - 1
    return Quad{x.a * y.a - bb, x.a * y.b + x.b * y.a + c * bb};
  };
  using QuadMat = std::vector<Quad>;
  auto at = [n](QuadMat& m, std::size_t i, std::size_t j) -> Quad& {
    return m[i * n + j];
  };
  QuadMat h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i * n + j] = Quad{Rat(v(i, j)) + (1 - c) * Rat(v(j, i)),
                          Rat(v(j, i)) - Rat(v(i, j))};
  // Faddeev-LeVerrier: characteristic polynomial coefficients, exact
  std::vector<Rat> p(n + 1);
  p[n] = 1;
  QuadMat m = h;
  for (std::size_t k = 1; k <= n; ++k) {
    Quad tr{Rat(0), Rat(0)};
    for (std::size_t i = 0; i < n; ++i) {
      tr.a += at(m, i, i).a;
      tr.b += at(m, i, i).b;
    }
    Rat ck_a = -tr.a / Rat(static_cast<long>(k));
    Rat ck_b = -tr.b / Rat(static_cast<long>(k));
    if (ck_b != 0)
      throw std::logic_error("characteristic coefficient not real");
    p[n - k] = ck_a;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) at(m, i, i).a += ck_a;
      QuadMat next(n * n, Quad{Rat(0), Rat(0)});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          const Quad& hi = at(h, i, l);
          if (hi.a == 0 && hi.b == 0) continue;
          for (std::size_t j = 0; j < n; ++j) {
            Quad prod = mul(hi, at(m, l, j));
            at(next, i, j).a += prod.a;
            at(next, i, j).b += prod.b;
          }
        }
      m = std::move(next);
    }
  }
  if (p[0] == 0)
    throw std::logic_error("singular Hermitian form at sample point");
  // Hermitian => real-rooted: Descartes' rule is exact
  std::vector<Rat> high_first(p.rbegin(), p.rend());
  int pos = detail::descartes_variations(high_first);
  std::vector<Rat> flipped = high_first;
  for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
  int neg = detail::descartes_variations(flipped);
  return pos - neg;
}

namespace detail {

/// A rational strictly between two distinct algebraic numbers.
inline Rat rational_between(const RealAlgebraic& lo, const RealAlgebraic& hi) {
  while (!(lo.hi() < hi.lo())) {
    lo.refine();
    hi.refine();
  }
  return (lo.hi() + hi.lo()) / 2;
}

}  // namespace detail

/// Levine-Tristram signature at w = e^{2 pi i k / d}. Exact; at singular
/// points (roots of the Alexander polynomial) returns the average of the two
/// one-sided limits.
inline Rat levine_tristram(const SeifertMatrix& sm, long k, long d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  k %= d;
  if (k < 0) k += d;
  long g = static_cast<long>(std::gcd(k, d));
  k /= g;
  d /= g;
  if (d == 1 || sm.size() == 0) return Rat(0);
  LaurentPoly delta = alexander_polynomial(sm);
  QPoly q = signature_fold(delta);
  if (d == 2) {
    // w = -1: the form is 2(V + V^T); nonsingular since delta(-1) is odd
    if (q.eval(Rat(-2)) == 0)
      throw std::logic_error("Alexander polynomial vanishes at -1");
    return Rat(symmetric_signature(sm.V + sm.V.transpose()));
  }
  RealAlgebraic x0 = two_cos_two_pi(static_cast<unsigned long>(k),
                                    static_cast<unsigned long>(d));
  std::vector<RealAlgebraic> roots;
  for (const RootInterval& ri : isolate_roots(q, Rat(-2), Rat(2)))
    roots.emplace_back(ri);
  // locate x0 among the jump locations (roots are increasing)
  std::size_t idx = 0;
  int at_root = 0;
  while (idx < roots.size()) {
    int cmp = roots[idx].compare(x0);
    if (cmp == 0) {
      at_root = 1;
      break;
    }
    if (cmp > 0) break;  // roots[idx] > x0
    ++idx;
  }
  auto bound = [&](long i) {
    if (i < 0) return RealAlgebraic(Rat(-2));
    if (i >= static_cast<long>(roots.size())) return RealAlgebraic(Rat(2));
    return roots[static_cast<std::size_t>(i)];
  };
  auto arc_value = [&](long left, long right) {
    Rat c = detail::rational_between(bound(left), bound(right));
    return Rat(seifert_form_signature(sm.V, c));
  };
  long i = static_cast<long>(idx);
  if (at_root)
    return (arc_value(i - 1, i) + arc_value(i, i + 1)) / 2;
  return arc_value(i - 1, i);
}

/// Average of the Levine-Tristram signatures over all d-th roots of unity.
inline Rat rho_average(const SeifertMatrix& sm, long d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  Rat sum(0);
  for (long k = 0; k < d; ++k) sum += levine_tristram(sm, k, d);
  return sum / Rat(d);
}

}  // namespace oblab
