#pragma once

#include <string>

#include "oblab/poly.hpp"

namespace oblab {

/// Laurent polynomial with rational coefficients: t^{low} * p(t) with
/// p(0) != 0 unless zero.
class LaurentPoly {
 public:
  LaurentPoly() {}
  LaurentPoly(QPoly p, long low = 0) : p_(std::move(p)), low_(low) {
    normalize();
  }
  explicit LaurentPoly(const Rat& c) : p_(c) {}

  static LaurentPoly one() { return LaurentPoly(QPoly(Rat(1))); }
  static LaurentPoly t_power(long e, const Rat& c = Rat(1)) {
    return LaurentPoly(QPoly(c), e);
  }

  bool is_zero() const { return p_.is_zero(); }
  long low() const { return low_; }
  long high() const { return low_ + p_.degree(); }
  const QPoly& poly() const { return p_; }
  Rat coeff(long e) const {
    if (e < low_) return Rat(0);
    return p_.coeff(static_cast<std::size_t>(e - low_));
  }

  bool operator==(const LaurentPoly& o) const {
    return (is_zero() && o.is_zero()) || (low_ == o.low_ && p_ == o.p_);
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    return LaurentPoly(p_ * o.p_, low_ + o.low_);
  }
  LaurentPoly operator*(const Rat& c) const {
    return LaurentPoly(p_ * c, low_);
  }
  LaurentPoly operator-() const { return LaurentPoly(-p_, low_); }
  LaurentPoly operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long lo = std::min(low_, o.low_);
    long hi = std::max(high(), o.high());
    std::vector<Rat> v(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e)
      v[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
    return LaurentPoly(QPoly(std::move(v)), lo);
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  Rat eval(const Rat& t) const {
    if (t == 0) throw std::invalid_argument("Laurent eval at 0");
    Rat v = p_.eval(t);
    Rat tp(1);
    long e = low_;
    Rat base = e >= 0 ? t : 1 / t;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) tp *= base;
    return v * tp;
  }

  /// Substitute t -> 1/t.
  LaurentPoly reversed() const {
    if (is_zero()) return *this;
    std::vector<Rat> v(p_.coeffs().rbegin(), p_.coeffs().rend());
    return LaurentPoly(QPoly(std::move(v)), -high());
  }

  bool is_symmetric() const { return *this == reversed(); }

  /// Equality up to multiplication by +-t^k.
  bool equals_up_to_unit(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return p_ == o.p_ || p_ == -o.p_;
  }

  /// Equality up to multiplication by c * t^k, c a nonzero rational.
  bool proportional(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return p_.monic() == o.p_.monic();
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    if (low_ == 0) return p_.str(var);
    return "t^(" + std::to_string(low_) + ")*(" + p_.str(var) + ")";
  }

 private:
  void normalize() {
    if (p_.is_zero()) {
      low_ = 0;
      return;
    }
    std::size_t shift = 0;
    while (p_.coeff(shift) == 0) ++shift;
    if (shift) {
      std::vector<Rat> v(p_.coeffs().begin() + shift, p_.coeffs().end());
      p_ = QPoly(std::move(v));
      low_ += static_cast<long>(shift);
    }
  }
  QPoly p_;
  long low_ = 0;
};

}  // namespace oblab
