#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "oblab/sturm.hpp"

namespace oblab {

/// A real algebraic number: squarefree integer polynomial together with an
/// open rational isolating interval (endpoints are not roots).
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rat(0)) {}
  explicit RealAlgebraic(const Rat& r)
      : poly_(QPoly::x() - QPoly(r)), lo_(r - 1), hi_(r + 1) {}
  RealAlgebraic(QPoly poly, Rat lo, Rat hi)
      : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    poly_ = squarefree_part(poly_).primitive();
    SturmChain c(poly_);
    if (poly_.eval(lo_) == 0 || poly_.eval(hi_) == 0 ||
        c.count(lo_, hi_) != 1)
      throw std::invalid_argument("interval does not isolate one root");
  }
  explicit RealAlgebraic(const RootInterval& ri)
      : poly_(ri.poly), lo_(ri.lo), hi_(ri.hi) {}

  const QPoly& poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  bool is_rational() const { return poly_.degree() == 1; }
  Rat rational_value() const {
    if (!is_rational()) throw std::logic_error("not rational");
    return -poly_.coeff(0) / poly_.coeff(1);
  }

  RealAlgebraic negated() const {
    std::vector<Rat> c(poly_.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    RealAlgebraic r;
    r.poly_ = QPoly(std::move(c)).primitive();
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    return r;
  }

  /// Halve the isolating interval.
  void refine() const {
    Rat m = detail::non_root_split(poly_, lo_, hi_);
    if (sgn(poly_.eval(lo_)) * sgn(poly_.eval(m)) < 0)
      hi_ = m;
    else
      lo_ = m;
  }

  void refine_below(const Rat& width) const {
    while (hi_ - lo_ >= width) refine();
  }

  /// -1, 0, +1 comparison with a rational.
  int compare(const Rat& r) const {
    if (r <= lo_) return 1;
    if (r >= hi_) return -1;
    int s = sgn(poly_.eval(r));
    if (s == 0) return 0;  // r is a root inside the interval: it is the root
    // sign of p at the root's left is sign at lo_
    return s == sgn(poly_.eval(lo_)) ? 1 : -1;
  }

  int compare(const RealAlgebraic& o) const {
    if (o.is_rational()) return compare(o.rational_value());
    if (is_rational()) return -o.compare(rational_value());
    for (;;) {
      if (hi_ <= o.lo_) return -1;
      if (o.hi_ <= lo_) return 1;
      // overlapping intervals: check for equality via the common factor
      QPoly g = oblab::gcd(poly_, o.poly_);
      if (g.degree() >= 1) {
        Rat a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
        SturmChain c(g);
        Rat a2 = a, b2 = b;
        while (g.eval(a2) == 0) a2 = a2 - (b - a) / 1000000;
        while (g.eval(b2) == 0) b2 = b2 + (b - a) / 1000000;
        if (c.count(a2, b2) >= 1) {
          // the shared root lies in both isolating intervals, hence is the
          // isolated root of both polynomials
          if (a2 >= lo_ && a2 >= o.lo_ && b2 <= hi_ && b2 <= o.hi_) return 0;
        }
      }
      refine();
      o.refine();
    }
  }

  bool operator<(const RealAlgebraic& o) const { return compare(o) < 0; }
  bool equals(const RealAlgebraic& o) const { return compare(o) == 0; }

  /// Approximate decimal rendering for reports (display only).
  double approx() const {
    refine_below(Rat(1, 1 << 24));
    return (lo_.get_d() + hi_.get_d()) / 2;
  }

 private:
  QPoly poly_;
  mutable Rat lo_, hi_;
};

/// 2 cos(2 pi k / n) as an exact algebraic number.
inline RealAlgebraic two_cos_two_pi(unsigned long k, unsigned long n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  k %= n;
  unsigned long g = std::gcd(k, n);
  k /= g;
  n /= g;
  if (k > n - k) k = n - k;          // cos(2 pi k/n) = cos(2 pi (n-k)/n)
  if (n == 1) return RealAlgebraic(Rat(2));
  if (n == 2) return RealAlgebraic(Rat(-2));
  if (n == 4) return RealAlgebraic(Rat(0));
  QPoly psi = real_cyclotomic(n);
  auto roots = isolate_roots(psi, Rat(-2), Rat(2));  // increasing in x
  // roots are 2 cos(2 pi j / n) for j coprime to n, j < n/2; angle increases
  // as j does, so x decreases. Rank of k among such j:
  std::size_t rank = 0;
  for (unsigned long j = 1; 2 * j < n; ++j)
    if (std::gcd(j, n) == 1 && j <= k) ++rank;
  if (rank == 0 || rank > roots.size())
    throw std::logic_error("root rank out of range");
  return RealAlgebraic(roots[roots.size() - rank]);
}

/// 2 cos(pi / n): the largest root of the real cyclotomic of 2n.
inline RealAlgebraic two_cos_pi_over(unsigned long n) {
  return two_cos_two_pi(1, 2 * n);
}

/// An angle theta in [0, pi] represented by x = 2 cos(theta); half_turn
/// distinguishes theta from 2 pi - theta when the orientation matters.
struct AlgebraicAngle {
  RealAlgebraic x;  // 2 cos(theta), in [-2, 2]
  bool half_turn = false;

  /// Angle order reverses the x order on [0, pi].
  int compare_angle(const AlgebraicAngle& o) const {
    return -x.compare(o.x);
  }
};

}  // namespace oblab
