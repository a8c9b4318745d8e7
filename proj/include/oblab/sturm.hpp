#pragma once

#include <functional>
#include <vector>

#include "oblab/poly.hpp"

namespace oblab {

/// Sturm chain of a polynomial (computed on its squarefree part).
class SturmChain {
 public:
  explicit SturmChain(const QPoly& p) {
    QPoly f = squarefree_part(p);
    chain_.push_back(f);
    if (f.degree() >= 1) {
      chain_.push_back(f.derivative());
      while (chain_.back().degree() >= 1) {
        QPoly r = -(chain_[chain_.size() - 2] % chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(r);
      }
    }
  }

  int variations_at(const Rat& x) const {
    int v = 0, last = 0;
    for (const QPoly& f : chain_) {
      int s = sgn(f.eval(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Number of distinct real roots in (lo, hi]; endpoints must not be roots
  /// of the squarefree part for open-interval semantics (then it counts the
  /// open interval too).
  int count(const Rat& lo, const Rat& hi) const {
    return variations_at(lo) - variations_at(hi);
  }

  const QPoly& squarefree() const { return chain_.front(); }

 private:
  std::vector<QPoly> chain_;
};

/// Open rational interval known to contain exactly one root of a squarefree
/// polynomial; endpoints are not roots.
struct RootInterval {
  QPoly poly;  // squarefree, primitive
  Rat lo, hi;  // open interval, p(lo) != 0, p(hi) != 0
};

namespace detail {

/// A point strictly inside (lo, hi) that is not a root of p.
inline Rat non_root_split(const QPoly& p, const Rat& lo, const Rat& hi) {
  Rat mid = (lo + hi) / 2;
  long k = 1;
  while (p.eval(mid) == 0) {
    mid = lo + (hi - lo) * Rat(k, 2 * k + 1);
    ++k;
  }
  return mid;
}

}  // namespace detail

/// Isolating intervals for all distinct real roots of p in the open interval
/// (lo, hi), ordered increasingly. Roots equal to lo or hi are excluded.
inline std::vector<RootInterval> isolate_roots(const QPoly& p, Rat lo, Rat hi) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<RootInterval> out;
  if (lo >= hi || p.degree() == 0) return out;
  QPoly f = squarefree_part(p).primitive();
  // roots at the endpoints are excluded from the open interval: deflate them
  while (f.eval(lo) == 0) f = f / (QPoly::x() - QPoly(lo));
  while (f.eval(hi) == 0) f = f / (QPoly::x() - QPoly(hi));
  if (f.degree() < 1) return out;
  f = f.primitive();
  SturmChain chain(f);
  std::function<void(Rat, Rat, int)> rec = [&](Rat a, Rat b, int n) {
    if (n == 0) return;
    if (n == 1) {
      out.push_back(RootInterval{f, a, b});
      return;
    }
    Rat m = detail::non_root_split(f, a, b);
    int left = chain.count(a, m);
    rec(a, m, left);
    rec(m, b, n - left);
  };
  int total = chain.count(lo, hi);
  rec(lo, hi, total);
  return out;
}

}  // namespace oblab
