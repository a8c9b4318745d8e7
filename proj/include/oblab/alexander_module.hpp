#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oblab/seifert.hpp"

namespace oblab {

using PolyMatrix = std::vector<std::vector<QPoly>>;

inline PolyMatrix poly_identity(std::size_t n) {
  PolyMatrix m(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QPoly(Rat(1));
  return m;
}

inline PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
  std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  PolyMatrix r(n, std::vector<QPoly>(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j)
        r[i][j] = r[i][j] + a[i][l] * b[l][j];
    }
  return r;
}

/// Determinant of a square polynomial matrix by evaluation/interpolation.
inline QPoly poly_matrix_det(const PolyMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return QPoly(Rat(1));
  long bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long row_max = 0;
    for (std::size_t j = 0; j < n; ++j)
      row_max = std::max(row_max, m[i][j].degree());
    bound += std::max(row_max, 0l);
  }
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  for (long p = 0; p <= bound; ++p) {
    Rat t(p);
    RatMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = m[i][j].eval(t);
    xs.emplace_back(t);
    ys.push_back(determinant(e));
  }
  QPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly li(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * (QPoly::x() - QPoly(xs[j]));
      denom *= xs[i] - xs[j];
    }
    out = out + li * (ys[i] / denom);
  }
  return out;
}

/// Adjugate: m * adj = adj * m = det(m) * I.
inline PolyMatrix poly_adjugate(const PolyMatrix& m) {
  std::size_t n = m.size();
  PolyMatrix adj(n, std::vector<QPoly>(n));
  if (n == 0) return adj;
  if (n == 1) {
    adj[0][0] = QPoly(Rat(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, std::vector<QPoly>(n - 1));
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;  // adj[i][j] = cofactor(j, i)
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      QPoly d = poly_matrix_det(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

/// Smith normal form over the rational polynomial ring (a Euclidean domain):
/// left * M * right = diag(d_i), d_i monic, each dividing the next.
struct PolySnfResult {
  std::vector<QPoly> diag;
  PolyMatrix left, right;
};

inline PolySnfResult poly_smith_normal_form(const PolyMatrix& input) {
  std::size_t rows = input.size(), cols = rows ? input[0].size() : 0;
  PolyMatrix a = input;
  PolyMatrix left = poly_identity(rows), right = poly_identity(cols);
  auto add_row = [](PolyMatrix& m, std::size_t dst, std::size_t src,
                    const QPoly& f) {
    for (std::size_t j = 0; j < m[dst].size(); ++j)
      m[dst][j] = m[dst][j] + f * m[src][j];
  };
  auto add_col = [](PolyMatrix& m, std::size_t dst, std::size_t src,
                    const QPoly& f) {
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i][dst] = m[i][dst] + f * m[i][src];
  };
  auto swap_cols = [](PolyMatrix& m, std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m.size(); ++i) std::swap(m[i][x], m[i][y]);
  };
  std::size_t t = 0;
  const std::size_t bound = std::min(rows, cols);
  while (t < bound) {
    bool block_zero = false;
    for (;;) {
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!a[i][j].is_zero() &&
              (!found || a[i][j].degree() < a[pi][pj].degree())) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) {
        block_zero = true;
        break;
      }
      if (pi != t) {
        std::swap(a[pi], a[t]);
        std::swap(left[pi], left[t]);
      }
      if (pj != t) {
        swap_cols(a, pj, t);
        swap_cols(right, pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        QPoly q = a[i][t] / a[t][t];
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        QPoly q = a[t][j] / a[t][t];
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block by the pivot
      bool restart = false;
      for (std::size_t i = t + 1; i < rows && !restart; ++i)
        for (std::size_t j = t + 1; j < cols && !restart; ++j)
          if (!(a[i][j] % a[t][t]).is_zero()) {
            add_row(a, t, i, QPoly(Rat(1)));
            add_row(left, t, i, QPoly(Rat(1)));
            restart = true;
          }
      if (!restart) break;
    }
    if (block_zero) break;
    // normalize pivot to monic (scaling a row by a nonzero constant is a unit)
    Rat lead = a[t][t].leading();
    if (lead != 1) {
      Rat inv_lead = 1 / lead;
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = a[t][j] * inv_lead;
      for (std::size_t j = 0; j < rows; ++j) left[t][j] = left[t][j] * inv_lead;
    }
    ++t;
  }
  PolySnfResult out;
  out.diag.assign(bound, QPoly());
  for (std::size_t i = 0; i < bound; ++i) out.diag[i] = a[i][i];
  out.left = left;
  out.right = right;
  return out;
}

/// Presentation matrix tV - V^T of the rational Alexander module.
inline PolyMatrix alexander_presentation(const SeifertMatrix& sm) {
  std::size_t n = sm.size();
  PolyMatrix a(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = QPoly::x() * Rat(sm.V(i, j)) - QPoly(Rat(sm.V(j, i)));
  return a;
}

namespace detail {

/// Distinct rational roots of f (primitive rational-root test).
inline std::vector<Rat> rational_roots(const QPoly& f) {
  std::vector<Rat> out;
  if (f.degree() < 1) return out;
  std::vector<Int> c = f.primitive_int();
  std::size_t low = 0;
  while (c[low] == 0) {
    if (out.empty()) out.emplace_back(0);
    ++low;
  }
  Int a0 = abs(c[low]), an = abs(c.back());
  for (Int p = 1; p <= a0; ++p) {
    if (a0 % p != 0) continue;
    for (Int q = 1; q <= an; ++q) {
      if (an % q != 0) continue;
      for (int s : {1, -1}) {
        Rat r(s * p, q);
        r.canonicalize();
        if (f.eval(r) == 0 &&
            std::find(out.begin(), out.end(), r) == out.end())
          out.push_back(r);
      }
    }
  }
  return out;
}

/// Split a monic polynomial into pairwise coprime factors: one (t-r)^m per
/// rational root, plus the rational-root-free remainder (kept whole).
inline std::vector<QPoly> primary_factors(const QPoly& d) {
  std::vector<QPoly> out;
  QPoly rest = d.monic();
  for (const Rat& r : rational_roots(d)) {
    QPoly lin = QPoly::x() - QPoly(r);
    QPoly power(Rat(1));
    while (lin.divides(rest)) {
      rest = rest / lin;
      power = power * lin;
    }
    out.push_back(power);
  }
  if (rest.degree() >= 1) out.push_back(rest);
  return out;
}

}  // namespace detail

/// Cyclic decomposition of the rational Alexander module into summands with
/// pairwise coprime orders (primary refinement of the invariant factors).
struct AlexanderModule {
  std::vector<LaurentPoly> cyclicFactors;  // monic nonunit orders
  /// A generator of each cyclic summand, in presentation coordinates.
  std::vector<std::vector<LaurentPoly>> generators;
  /// Change of basis: cyclic coordinates of a vector in the presentation
  /// generators are obtained by multiplying with this matrix.
  PolyMatrix generatorExpressions;
};

inline AlexanderModule alexander_module(const SeifertMatrix& sm) {
  const std::size_t n = sm.size();
  PolySnfResult snf = poly_smith_normal_form(alexander_presentation(sm));
  AlexanderModule out;
  out.generatorExpressions = snf.left;
  if (n == 0) return out;
  QPoly udet = poly_matrix_det(snf.left);
  if (udet.degree() != 0) throw std::logic_error("transform not unimodular");
  PolyMatrix uadj = poly_adjugate(snf.left);
  Rat inv_det = 1 / udet.coeff(0);
  for (std::size_t i = 0; i < snf.diag.size(); ++i) {
    if (snf.diag[i].degree() <= 0) {
      if (snf.diag[i].is_zero())
        throw std::logic_error("Alexander module has a free summand");
      continue;  // unit order: trivial summand
    }
    // generator of the invariant-factor summand: v with U v = e_i
    std::vector<QPoly> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = uadj[r][i] * inv_det;
    for (const QPoly& f : detail::primary_factors(snf.diag[i])) {
      if (f.coeff(0) == 0) continue;  // power of t: a unit in the Laurent ring
      // the f-torsion part of <v> is generated by (order/f) v
      QPoly cof = snf.diag[i].monic() / f;
      std::vector<LaurentPoly> gen(n);
      for (std::size_t r = 0; r < n; ++r) gen[r] = LaurentPoly(v[r] * cof);
      out.cyclicFactors.emplace_back(f);
      out.generators.push_back(std::move(gen));
    }
  }
  return out;
}

/// Element of Q(t)/Q[t^{+-1}] stored as a canonical proper fraction num/den
/// with deg num < deg den, den primitive with positive leading coefficient
/// and nonzero constant term.
class BlanchfieldValue {
 public:
  BlanchfieldValue() : den_(QPoly(Rat(1))) {}

  static BlanchfieldValue from_fraction(const LaurentPoly& num,
                                        const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    // move the t^a unit factor of the denominator into the exponent
    LaurentPoly d(den);
    QPoly d0 = d.poly();
    long num_low = num.low() - d.low();
    QPoly p = num.poly();
    // lowest terms: the denominator of the class is only defined up to
    // common factors
    QPoly g = oblab::gcd(p, d0);
    if (g.degree() >= 1) {
      p = p / g;
      d0 = d0 / g;
    }
    if (d0.degree() == 0) return BlanchfieldValue();  // polynomial class: zero
    // normalize denominator to primitive, positive leading
    QPoly d0p = d0.primitive();
    Rat scale = d0.leading() / d0p.leading();  // d0 = scale * d0p
    p = p * (1 / scale);
    // clear negative exponents: t^{-1} = -Q/d0p(0) mod d0p where
    // d0p = d0p(0) + t Q(t)
    BlanchfieldValue v;
    v.den_ = d0p;
    if (p.is_zero()) return v;
    QPoly r = p % d0p;
    if (num_low > 0) {
      QPoly tp = QPoly::x() % d0p;
      for (long i = 0; i < num_low; ++i) r = (r * tp) % d0p;
    } else if (num_low < 0) {
      std::vector<Rat> qc(d0p.coeffs().begin() + 1, d0p.coeffs().end());
      QPoly h = QPoly(std::move(qc)) * (-1 / d0p.coeff(0));
      for (long i = 0; i < -num_low; ++i) r = (r * h) % d0p;
    }
    v.num_ = r;
    return v;
  }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const BlanchfieldValue& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Substitute t -> 1/t. Uses the palindromic symmetry of the denominator.
  BlanchfieldValue conjugated() const {
    LaurentPoly n(num_);
    LaurentPoly rev_num = n.reversed();
    LaurentPoly d(den_);
    LaurentPoly rev_den = d.reversed();  // t^{-deg} * den(1/t)
    // value(1/t) = rev_num / rev_den after clearing the same power of t
    long shift = rev_den.low();
    return from_fraction(LaurentPoly(rev_num.poly(), rev_num.low() - shift),
                         rev_den.poly());
  }

  /// True when this = (c^2) * o for a nonzero rational c (equality up to
  /// unit times conjugate unit).
  bool matches_up_to_norm(const BlanchfieldValue& o) const {
    if (den_ != o.den_) return false;
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    Rat r = num_.leading() / o.num_.leading();
    if (r <= 0) return false;
    if (!(num_ == o.num_ * r)) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(r.get_den().get_mpz_t()) != 0;
  }

  std::string str() const {
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  QPoly num_;  // deg < deg den
  QPoly den_;
};

/// Blanchfield pairing Bl(a,b) = conj(a)^T (1-t) (tV - V^T)^{-1} b reduced
/// modulo the Laurent polynomial ring, for a, b in presentation generators.
inline BlanchfieldValue blanchfield_pairing(const SeifertMatrix& sm,
                                            const std::vector<LaurentPoly>& a,
                                            const std::vector<LaurentPoly>& b) {
  std::size_t n = sm.size();
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("element size mismatch");
  if (n == 0) return BlanchfieldValue();
  PolyMatrix pres = alexander_presentation(sm);
  PolyMatrix adj = poly_adjugate(pres);
  QPoly det = poly_matrix_det(pres);
  LaurentPoly total;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    LaurentPoly ai = a[i].reversed();  // conjugate: t -> 1/t
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j].is_zero() || b[j].is_zero()) continue;
      total = total + ai * LaurentPoly(adj[i][j]) * b[j];
    }
  }
  LaurentPoly one_minus_t(QPoly::from_int({1, -1}));
  return BlanchfieldValue::from_fraction(total * one_minus_t, det);
}

/// A submodule of the Alexander module, listed by generators in presentation
/// coordinates, with a human-readable label.
struct BlanchfieldSubmodule {
  std::string label;
  std::vector<std::vector<LaurentPoly>> generators;
};

namespace detail {

/// Irreducibility over Q for degree <= 3 (rational-root test); higher degrees
/// are outside the supported shapes.
inline bool is_irreducible_small(const QPoly& f) {
  long d = f.degree();
  if (d <= 0) throw std::invalid_argument("constant polynomial");
  if (d == 1) return true;
  if (d > 3) throw std::invalid_argument("unsupported module shape");
  // rational root p/q with p | constant, q | leading (on the primitive form)
  std::vector<Int> c = f.primitive_int();
  Int a0 = abs(c.front()), an = abs(c.back());
  if (a0 == 0) return false;  // t divides: reducible (t is a unit-free factor)
  for (Int p = 1; p <= a0; ++p) {
    if (a0 % p != 0) continue;
    for (Int q = 1; q <= an; ++q) {
      if (an % q != 0) continue;
      Rat r1(p, q), r2(-p, q);
      r1.canonicalize();
      r2.canonicalize();
      if (f.eval(r1) == 0 || f.eval(r2) == 0) return false;
    }
  }
  // degree 2 or 3 without a rational root has no linear factor, hence is
  // irreducible
  return true;
}

}  // namespace detail

/// All metabolizers (P = P^perp for the Blanchfield pairing) of the rational
/// Alexander module, for modules that split into at most two cyclic factors
/// with coprime irreducible orders. Other shapes raise an error.
inline std::vector<BlanchfieldSubmodule> blanchfield_metabolizers(
    const SeifertMatrix& sm) {
  AlexanderModule mod = alexander_module(sm);
  std::size_t n = sm.size();
  std::size_t nf = mod.cyclicFactors.size();
  if (nf > 2) throw std::invalid_argument("unsupported module shape");
  if (nf == 0) {
    // zero module: the zero submodule is its own annihilator
    return {BlanchfieldSubmodule{"0", {}}};
  }
  for (const LaurentPoly& f : mod.cyclicFactors) {
    bool irr;
    try {
      irr = detail::is_irreducible_small(f.poly());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("unsupported module shape");
    }
    if (!irr) throw std::invalid_argument("unsupported module shape");
  }
  if (nf == 2 &&
      gcd(mod.cyclicFactors[0].poly(), mod.cyclicFactors[1].poly()).degree() >=
          1)
    throw std::invalid_argument("unsupported module shape");
  const auto& gen = mod.generators;
  (void)n;

  struct Candidate {
    std::string label;
    std::vector<std::vector<LaurentPoly>> gens;
    std::size_t size_rank;  // 0 = zero, 1 = one factor, 2 = whole
  };
  std::vector<Candidate> cands;
  cands.push_back({"0", {}, 0});
  if (nf == 1) {
    cands.push_back({"all", {gen[0]}, 2});
  } else {
    cands.push_back({"<g1>", {gen[0]}, 1});
    cands.push_back({"<g2>", {gen[1]}, 1});
    cands.push_back({"all", {gen[0], gen[1]}, 2});
  }

  auto annihilates = [&](const Candidate& p, const Candidate& q) {
    for (const auto& x : p.gens)
      for (const auto& y : q.gens)
        if (!blanchfield_pairing(sm, x, y).is_zero()) return false;
    return true;
  };
  std::vector<BlanchfieldSubmodule> out;
  for (const Candidate& p : cands) {
    // P^perp is the largest candidate annihilating P (candidates exhaust all
    // submodules under the coprime-irreducible precondition)
    const Candidate* perp = nullptr;
    for (const Candidate& q : cands)
      if (annihilates(p, q) && (!perp || q.size_rank > perp->size_rank))
        perp = &q;
    if (perp && perp->label == p.label)
      out.push_back(BlanchfieldSubmodule{p.label, p.gens});
  }
  return out;
}

}  // namespace oblab
