#ifndef TWL_POLYOPS_HPP
#define TWL_POLYOPS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "twl/laurent.hpp"

namespace twl {

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

// GCD of all coefficients, positive; 0 for the zero polynomial.
inline Int content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Monomial whose product with p makes every used variable's minimum exponent
// zero (the unique normalizing monomial shift).
inline LaurentPoly normalizing_monomial(const LaurentPoly& p) {
  Exponents e = zero_exponents();
  for (int i = 0; i < kVarCount; ++i)
    e[i] = -p.min_exp(static_cast<Var>(i));
  return LaurentPoly::monomial(e, 1);
}

inline LaurentPoly shift_nonneg(const LaurentPoly& p) {
  return p * normalizing_monomial(p);
}

// Divide by integer content and the normalizing monomial; fix the sign so the
// graded-lex leading coefficient is positive. Errors on zero.
inline LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("primitive_part of zero");
  Int cont = content(p);
  LaurentPoly r;
  for (const auto& [e, c] : p.terms())
    r.add_term(e, c / cont);
  r = shift_nonneg(r);
  if (r.leading_term().second < 0) r = -r;
  return r;
}

// Exact division a / b over the Laurent ring; throws if not exact. Both
// operands are shifted to ordinary polynomials first; the quotient absorbs
// the monomial mismatch.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div by zero");
  if (a.is_zero()) return LaurentPoly();
  LaurentPoly ma = normalizing_monomial(a);
  LaurentPoly mb = normalizing_monomial(b);
  LaurentPoly r = a * ma;
  LaurentPoly d = b * mb;
  LaurentPoly q;
  const auto& [de, dc] = d.leading_term();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    Exponents qe;
    for (int i = 0; i < kVarCount; ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) throw std::domain_error("exact_div: not divisible");
    }
    if (rc % dc != 0) throw std::domain_error("exact_div: not divisible");
    LaurentPoly t = LaurentPoly::monomial(qe, rc / dc);
    q += t;
    r -= t * d;
  }
  // a*ma = q*(b*mb)  =>  a/b = q * mb * ma^{-1}
  return q * mb * ma.pow(-1);
}

inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  try {
    exact_div(p, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

namespace detail {

// View p as univariate in w: ascending coefficient list of length deg+1.
// Caller guarantees p has non-negative exponents in w.
inline std::vector<LaurentPoly> coeffs_in(const LaurentPoly& p, Var w) {
  int wi = static_cast<int>(w);
  std::vector<LaurentPoly> out(static_cast<std::size_t>(p.degree_in(w)) + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents re = e;
    int k = re[wi];
    re[wi] = 0;
    out[static_cast<std::size_t>(k)].add_term(re, c);
  }
  return out;
}

inline LaurentPoly from_coeffs(const std::vector<LaurentPoly>& cs, Var w) {
  LaurentPoly p;
  for (std::size_t k = 0; k < cs.size(); ++k)
    p += cs[k] * V(w, static_cast<int>(k));
  return p;
}

// Pseudo-remainder of a by b in the variable w (both polynomial in w,
// deg_w(b) >= 1). Returns lc(b)^(deg a - deg b + 1) * a  mod b.
inline LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, Var w) {
  int db = b.degree_in(w);
  LaurentPoly lcb = coeffs_in(b, w)[static_cast<std::size_t>(db)];
  int e = a.degree_in(w) - db + 1;
  while (!a.is_zero() && a.degree_in(w) >= db) {
    auto ca = coeffs_in(a, w);
    int da = static_cast<int>(ca.size()) - 1;
    LaurentPoly lead = ca[static_cast<std::size_t>(da)];
    a = lcb * a - lead * V(w, da - db) * b;
    --e;
  }
  for (; e > 0; --e) a = lcb * a;
  return a;
}

}  // namespace detail

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

namespace detail {

// GCD of the w-coefficients of p (the content of p w.r.t. w).
inline LaurentPoly content_wrt(const LaurentPoly& p, Var w) {
  LaurentPoly g;
  for (const LaurentPoly& c : coeffs_in(p, w)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c) * LaurentPoly::constant(content(c))
                    : poly_gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

}  // namespace detail

// GCD in Z[vars] up to the usual Laurent units, returned sign- and
// monomial-normalized (primitive PRS, recursing through contents).
inline LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) return LaurentPoly();
  if (a0.is_zero()) return primitive_part(b0) * LaurentPoly::constant(content(b0));
  if (b0.is_zero()) return primitive_part(a0) * LaurentPoly::constant(content(a0));
  LaurentPoly a = shift_nonneg(a0);
  LaurentPoly b = shift_nonneg(b0);
  // Main variable: last alphabet position used by either operand.
  int vi = -1;
  for (int i = kVarCount - 1; i >= 0 && vi < 0; --i)
    if (a.uses(static_cast<Var>(i)) || b.uses(static_cast<Var>(i))) vi = i;
  if (vi < 0) return LaurentPoly::constant(int_gcd(a.constant_value(), b.constant_value()));
  Var w = static_cast<Var>(vi);
  if (!a.uses(w)) return poly_gcd(a, detail::content_wrt(b, w));
  if (!b.uses(w)) return poly_gcd(detail::content_wrt(a, w), b);
  LaurentPoly ca = detail::content_wrt(a, w);
  LaurentPoly cb = detail::content_wrt(b, w);
  LaurentPoly cont_gcd = poly_gcd(ca, cb);
  LaurentPoly pa = exact_div(a, ca);
  LaurentPoly pb = exact_div(b, cb);
  if (pa.degree_in(w) < pb.degree_in(w)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    LaurentPoly r = detail::prem(pa, pb, w);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = LaurentPoly();
    } else {
      pb = exact_div(r, detail::content_wrt(r, w));
    }
  }
  if (!pa.uses(w)) return cont_gcd;  // coprime in w
  LaurentPoly g = cont_gcd * exact_div(pa, detail::content_wrt(pa, w));
  LaurentPoly result = primitive_part(g) * LaurentPoly::constant(content(g));
  return result;
}

// Squarefree part: p divided by gcd(p, dp/dv1, dp/dv2, ...), primitive.
inline LaurentPoly radical(const LaurentPoly& p0) {
  LaurentPoly p = primitive_part(p0);
  LaurentPoly g = p;
  for (Var w : p.used_vars()) g = poly_gcd(g, p.derivative(w));
  if (g.is_constant()) return p;
  return primitive_part(exact_div(p, g));
}

// Sylvester resultant eliminating `elim`. Inputs may be Laurent in `elim`;
// each is shifted by a power of `elim` first. Sign convention: p's
// coefficients occupy the first block of rows.
inline LaurentPoly resultant(const LaurentPoly& p0, const LaurentPoly& r0,
                             Var elim) {
  LaurentPoly p = p0 * V(elim, -p0.min_exp(elim));
  LaurentPoly r = r0 * V(elim, -r0.min_exp(elim));
  int dp = p.degree_in(elim);
  int dr = r.degree_in(elim);
  if (dp == 0 && dr == 0)
    throw std::domain_error("resultant: neither input involves the variable");
  auto pc = detail::coeffs_in(p, elim);
  auto rc = detail::coeffs_in(r, elim);
  int n = dp + dr;
  // Sylvester matrix, row-major: dr rows of p's coefficients, dp rows of r's,
  // coefficients descending in the eliminated variable.
  std::vector<std::vector<LaurentPoly>> m(
      static_cast<std::size_t>(n),
      std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int row = 0; row < dr; ++row)
    for (int j = 0; j <= dp; ++j)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
          pc[static_cast<std::size_t>(dp - j)];
  for (int row = 0; row < dp; ++row)
    for (int j = 0; j <= dr; ++j)
      m[static_cast<std::size_t>(dr + row)][static_cast<std::size_t>(row + j)] =
          rc[static_cast<std::size_t>(dr - j)];

  // Fraction-free Bareiss elimination; divisions are exact.
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(1);
  for (int k = 0; k < n - 1; ++k) {
    std::size_t ku = static_cast<std::size_t>(k);
    if (m[ku][ku].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[static_cast<std::size_t>(i)][ku].is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return LaurentPoly();  // singular: resultant is zero
      std::swap(m[ku], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      std::size_t iu = static_cast<std::size_t>(i);
      for (int j = k + 1; j < n; ++j) {
        std::size_t ju = static_cast<std::size_t>(j);
        m[iu][ju] =
            exact_div(m[ku][ku] * m[iu][ju] - m[iu][ku] * m[ku][ju], prev);
      }
      m[iu][ku] = LaurentPoly();
    }
    prev = m[ku][ku];
  }
  LaurentPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign < 0 ? -det : det;
}

}  // namespace twl

#endif  // TWL_POLYOPS_HPP
