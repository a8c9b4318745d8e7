#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oblab/rational.hpp"

namespace oblab {

/// Dense univariate polynomial with rational coefficients, low degree first.
class QPoly {
 public:
  QPoly() {}
  explicit QPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  explicit QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  static QPoly from_int(const std::vector<long>& c) {
    std::vector<Rat> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
  }
  static QPoly monomial(std::size_t deg, const Rat& c = Rat(1)) {
    std::vector<Rat> v(deg + 1);
    v[deg] = c;
    return QPoly(std::move(v));
  }
  static QPoly x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rat& coeff(std::size_t i) const {
    static const Rat zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const Rat& leading() const {
    if (is_zero()) throw std::logic_error("leading coeff of zero poly");
    return coeffs_.back();
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  QPoly operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return QPoly(std::move(v));
  }
  QPoly operator-(const QPoly& o) const { return *this + (-o); }
  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPoly(std::move(v));
  }
  QPoly operator*(const Rat& c) const {
    QPoly r = *this;
    for (auto& a : r.coeffs_) a *= c;
    r.trim();
    return r;
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero poly");
    QPoly r = *this;
    std::vector<Rat> q(
        degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t shift = r.degree() - d.degree();
      Rat f = r.leading() / d.leading();
      q[shift] = f;
      r = r - d * QPoly::monomial(shift, f);
    }
    return {QPoly(std::move(q)), r};
  }
  QPoly operator/(const QPoly& d) const { return divmod(d).first; }
  QPoly operator%(const QPoly& d) const { return divmod(d).second; }

  bool divides(const QPoly& other) const {
    return other.divmod(*this).second.is_zero();
  }

  QPoly derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(v));
  }

  QPoly monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
  }

  /// Integer coefficient vector of the primitive associate, with positive
  /// leading coefficient.
  std::vector<Int> primitive_int() const {
    if (is_zero()) return {};
    Int den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs_)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.get_den().get_mpz_t());
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      Rat scaled = coeffs_[i] * Rat(den_lcm);
      v[i] = scaled.get_num();
      num_gcd = gcd(num_gcd, v[i]);
    }
    if (v.back() < 0) num_gcd = -num_gcd;
    for (auto& c : v) c /= num_gcd;
    return v;
  }

  QPoly primitive() const {
    auto v = primitive_int();
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return QPoly(std::move(r));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Rat& c = coeff(i);
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      Rat a = abs(c);
      if (a != 1 || i == 0) out += a.get_str();
      if (i > 0) {
        if (a != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

inline QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

inline QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 1) return p;
  QPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return p / g;
}

/// p_j(x) with p_j(2 cos t) = 2 cos(j t); p_0 = 2, p_1 = x.
inline QPoly two_cos_multiple(std::size_t j) {
  QPoly prev(Rat(2));
  if (j == 0) return prev;
  QPoly cur = QPoly::x();
  for (std::size_t k = 1; k < j; ++k) {
    QPoly next = QPoly::x() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// n-th cyclotomic polynomial, by iterated division of x^n - 1.
inline QPoly cyclotomic(unsigned long n) {
  static std::map<unsigned long, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Rat> xn(n + 1, Rat(0));
  xn[0] = -1;
  xn[n] = 1;
  QPoly p{std::vector<Rat>(xn)};
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) p = p / cyclotomic(d);
  cache[n] = p;
  return p;
}

/// Minimal polynomial of 2 cos(2 pi / n) for n >= 3: the "real" fold of the
/// n-th cyclotomic polynomial. Roots are 2 cos(2 pi k / n), gcd(k,n)=1.
inline QPoly real_cyclotomic(unsigned long n) {
  if (n == 1) return QPoly::x() - QPoly(Rat(2));   // 2 cos 0 = 2
  if (n == 2) return QPoly::x() + QPoly(Rat(2));   // 2 cos pi = -2
  QPoly phi = cyclotomic(n);
  const long h = phi.degree() / 2;  // phi is self-reciprocal for n >= 3
  QPoly psi(phi.coeff(h));
  for (long j = 1; j <= h; ++j)
    psi = psi + two_cos_multiple(j) * phi.coeff(h + j);
  return psi;
}

}  // namespace oblab
