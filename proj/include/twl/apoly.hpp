#ifndef TWL_APOLY_HPP
#define TWL_APOLY_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twl/chebyshev.hpp"
#include "twl/laurent.hpp"
#include "twl/numeric.hpp"
#include "twl/polyops.hpp"
#include "twl/ratfunc.hpp"
#include "twl/riley.hpp"

namespace twl {

// A-polynomial 2-tuple of W_k. A_1 = A_2 = nonhyp_factor * canonical_factor
// up to unit monomial and sign.
struct APolyTuple {
  LaurentPoly a1;
  LaurentPoly a2;
  LaurentPoly nonhyp_factor;   // L - 1 (k odd) or L M^2 - 1 (k even)
  LaurentPoly canonical_factor;
};

// A_1(M,L) from the closed-form F (k = 2n-1) / G (k = 2n) sums, cleared by
// M^{2n}(L+1)^{2n} resp. M^{2n+1}(LM^2+1)^{2n+1} and made primitive.
inline APolyTuple apoly_closed_form(int k) {
  if (k < 1) throw std::domain_error("apoly_closed_form: W_0 is not hyperbolic");
  LaurentPoly M = V(Var::M), L = V(Var::L);
  LaurentPoly m_minus = M - V(Var::M, -1);
  LaurentPoly m_plus = M + V(Var::M, -1);
  int n = (k + 1) / 2;
  RatFunc sum;
  LaurentPoly multiplier, nonhyp;
  if (k % 2 == 1) {
    RatFunc ratio = RatFunc(L - C(1), L + C(1));
    for (int i = 0; i <= n; ++i) {
      Int coef = binomial(n + 1 + i, 2 * i + 1) - binomial(n - 1 + i, 2 * i + 1);
      sum += RatFunc(LaurentPoly::constant(coef) * m_minus.pow(2 * i)) *
             ratio.pow(2 * i);
    }
    for (int i = 0; i <= n - 1; ++i) {
      Int coef = binomial(n + i, 2 * i + 1);
      sum += RatFunc(LaurentPoly::constant(coef) * m_plus *
                     m_minus.pow(2 * i + 1)) *
             ratio.pow(2 * i + 1);
    }
    multiplier = V(Var::M, 2 * n) * (L + C(1)).pow(2 * n);
    nonhyp = L - C(1);
  } else {
    LaurentPoly lm2 = L * V(Var::M, 2);
    RatFunc ratio = RatFunc(lm2 - C(1), lm2 + C(1));
    for (int i = 0; i <= n; ++i) {
      Int coef = binomial(n + 1 + i, 2 * i + 1) + binomial(n + i, 2 * i + 1);
      sum += RatFunc(LaurentPoly::constant(coef) * m_minus.pow(2 * i + 1)) *
             ratio.pow(2 * i + 1);
    }
    for (int i = 0; i <= n; ++i) {
      Int coef = binomial(n + i, 2 * i);
      sum += RatFunc(LaurentPoly::constant(coef) * m_plus * m_minus.pow(2 * i)) *
             ratio.pow(2 * i);
    }
    multiplier = V(Var::M, 2 * n + 1) * (lm2 + C(1)).pow(2 * n + 1);
    nonhyp = lm2 - C(1);
  }
  LaurentPoly cleared = exact_div(sum.num() * multiplier, sum.den());
  APolyTuple tuple;
  tuple.canonical_factor = primitive_part(cleared);
  tuple.nonhyp_factor = nonhyp;
  tuple.a1 = primitive_part(nonhyp * tuple.canonical_factor);
  tuple.a2 = tuple.a1;
  return tuple;
}

enum class Component { a, b };

// Independent derivation of the canonical factor: restrict the canonical
// component to the boundary slice s2 = +-1 (component a; s1 = +-1 for b),
// pair it with the cleared longitude relation L M (2M - sigma z) = sigma M z - 2,
// and eliminate z by a resultant. The result is divisible by the closed-form
// canonical factor; comparisons use its squarefree primitive part.
inline LaurentPoly elimination_oracle(int k, Component comp, int s2_sign = 1) {
  if (k < 1) throw std::domain_error("elimination_oracle: need k >= 1");
  if (s2_sign != 1 && s2_sign != -1)
    throw std::invalid_argument("elimination_oracle: sign must be +-1");
  LaurentPoly c = canonical_poly(TwistedWhitehead{k});
  LaurentPoly meridian = V(Var::M) + V(Var::M, -1);
  std::map<Var, LaurentPoly> bind;
  if (comp == Component::a) {
    bind = {{Var::x, meridian}, {Var::y, C(2 * s2_sign)}};
  } else {
    bind = {{Var::x, C(2 * s2_sign)}, {Var::y, meridian}};
  }
  LaurentPoly p1 = c.substitute_poly(bind);
  LaurentPoly z = V(Var::z), M = V(Var::M), L = V(Var::L);
  LaurentPoly sigma = C(s2_sign);
  if (k % 2 == 1) {
    // On the boundary slice v = 2 + (z - sigma x)^2, and z = sigma x is the
    // reducible branch (L = 1); the restricted canonical polynomial factors
    // through it, so split it off before eliminating.
    p1 = exact_div(p1, z - sigma * meridian);
  }
  // Longitude relation L = w11 M^-1 (k odd) resp. L = w11 M^-3 (k even; the
  // canonical longitude of W_{2n} carries an extra meridian correction),
  // cleared of the w11 = (sigma M z - 2)/(2M - sigma z) denominator.
  LaurentPoly eigen = (k % 2 == 1) ? L : L * V(Var::M, 2);
  LaurentPoly p2 = eigen * M * (C(2) * M - sigma * z) - (sigma * M * z - C(2));
  LaurentPoly res = resultant(p1, p2, Var::z);
  if (res.is_zero())
    throw std::runtime_error("elimination_oracle: degenerate resultant");
  return primitive_part(res);
}

inline LaurentPoly squarefree_primitive(const LaurentPoly& p) {
  return radical(p);
}

// --- Newton polygon -------------------------------------------------------

// Boundary slope as a reduced rational; vertical sides are (1, 0).
struct Slope {
  long num = 0;
  long den = 1;

  static Slope vertical() { return {1, 0}; }
  bool is_vertical() const { return den == 0; }

  static Slope of(long dy, long dx) {
    if (dx == 0) return vertical();
    long g = std::gcd(std::labs(dy), std::labs(dx));
    if (g == 0) g = 1;
    dy /= g;
    dx /= g;
    if (dx < 0) {
      dx = -dx;
      dy = -dy;
    }
    return {dy, dx};
  }

  std::string to_string() const {
    if (is_vertical()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.is_vertical() != b.is_vertical()) return !a.is_vertical();
    if (a.is_vertical()) return false;
    return a.num * b.den < b.num * a.den;
  }
};

struct NewtonPolygon {
  std::vector<std::pair<long, long>> vertices;  // counterclockwise
  std::vector<Slope> slopes;                    // sorted, one per side

  std::size_t distinct_slopes() const {
    std::vector<Slope> s = slopes;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s.size();
  }
};

// Convex hull of the (M-exponent, L-exponent) support, Andrew monotone chain.
inline NewtonPolygon newton_polygon(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("newton_polygon of zero");
  std::vector<std::pair<long, long>> pts;
  for (const auto& [e, c] : p.terms())
    pts.emplace_back(e[static_cast<int>(Var::M)], e[static_cast<int>(Var::L)]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  NewtonPolygon poly;
  if (pts.size() == 1) {
    poly.vertices = pts;
    return poly;
  }
  auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a,
                  const std::pair<long, long>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {  // lower hull
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {  // upper hull
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // last point repeats the first
  poly.vertices = hull;

  if (hull.size() == 2) {
    poly.slopes = {Slope::of(hull[1].second - hull[0].second,
                             hull[1].first - hull[0].first)};
  } else {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % hull.size()];
      poly.slopes.push_back(Slope::of(b.second - a.second, b.first - a.first));
    }
  }
  std::sort(poly.slopes.begin(), poly.slopes.end());
  return poly;
}

// Selection test for a geometrically meaningful factor: it must have at
// least 3 monomials and at least 2 distinct boundary slopes.
inline bool passes_canonical_check(const LaurentPoly& factor) {
  if (factor.num_terms() < 3) return false;
  return newton_polygon(factor).distinct_slopes() >= 2;
}

inline bool canonical_check(int k) {
  return passes_canonical_check(apoly_closed_form(k).canonical_factor);
}

// --- Numeric witnesses ----------------------------------------------------

struct WitnessReport {
  int k = 0;
  int trials = 0;
  double max_canonical_residual = 0.0;   // A-polynomial residual, normalized
  double max_noncanonical_deviation = 0.0;  // |L-1| or |LM^2-1|
  bool has_noncanonical = false;
  std::vector<std::string> failures;
};

namespace detail {

inline CMat2 rho_numeric(Letter l, Complex u, Complex s1, Complex s2) {
  switch (l) {
    case Letter::a: return {s1, 1.0, 0.0, 1.0 / s1};
    case Letter::A: return {1.0 / s1, -1.0, 0.0, s1};
    case Letter::b: return {s2, 0.0, u, 1.0 / s2};
    case Letter::B: return {1.0 / s2, 0.0, -u, s2};
  }
  throw std::logic_error("rho_numeric: bad letter");
}

inline CMat2 rho_numeric(const GroupWord& w, Complex u, Complex s1, Complex s2) {
  CMat2 m = CMat2::identity();
  for (Letter l : w.letters) m = m * rho_numeric(l, u, s1, s2);
  return m;
}

// Evaluate p(M, L) and normalize by the largest term magnitude.
inline double normalized_residual(const LaurentPoly& p, Complex m, Complex l) {
  double scale = 0.0;
  Complex total = 0.0;
  for (const auto& [e, c] : p.terms()) {
    Complex term = static_cast<double>(c) *
                   std::pow(m, e[static_cast<int>(Var::M)]) *
                   std::pow(l, e[static_cast<int>(Var::L)]);
    total += term;
    scale = std::max(scale, std::abs(term));
  }
  return scale > 0.0 ? std::abs(total) / scale : std::abs(total);
}

// Roots in z of p(x, y, z) at fixed numerical x, y.
inline std::vector<Complex> z_roots(const LaurentPoly& p, Complex x, Complex y) {
  auto cs = coeffs_in(p, Var::z);
  std::map<Var, Complex> pt{{Var::x, x}, {Var::y, y}};
  std::vector<Complex> coeffs(cs.size(), 0.0);
  for (std::size_t i = 0; i < cs.size(); ++i)
    coeffs[i] = cs[i].is_zero() ? Complex(0.0) : cs[i].eval_complex(pt);
  return poly_roots(coeffs);
}

}  // namespace detail

// Random representations on the canonical component must satisfy the
// canonical factor; representations on the cyclotomic-type components
// must land on L = 1 (k odd) resp. L M^2 = 1 (k even).
inline WitnessReport numeric_witness(int k, int trials, std::uint64_t seed = 1) {
  if (k < 1) throw std::domain_error("numeric_witness: need k >= 1");
  WitnessReport report;
  report.k = k;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  APolyTuple tuple = apoly_closed_form(k);
  LaurentPoly canon_xyz = canonical_poly(TwistedWhitehead{k});
  GroupWord w = build_word(LinkSpec{TwistedWhitehead{k}});
  int n = (k + 1) / 2;

  for (int trial = 0; trial < trials; ++trial) {
    double modulus = (trial % 2 == 0) ? 1.0 : 0.6 + 1.2 * unit(rng);
    double phase = 2.0 * M_PI * unit(rng);
    Complex s1 = std::polar(modulus, phase);
    Complex s2 = (unit(rng) < 0.5) ? 1.0 : -1.0;
    Complex x = s1 + 1.0 / s1;
    Complex y = s2 + 1.0 / s2;

    // Canonical component: any z-root of the canonical polynomial.
    for (Complex z : detail::z_roots(canon_xyz, x, y)) {
      Complex u = z - s1 * s2 - 1.0 / (s1 * s2);
      if (std::abs(u) < 1e-6) continue;  // reducible representation
      CMat2 rw = detail::rho_numeric(w, u, s1, s2);
      if (std::abs(rw.m21) > 1e-6 * rw.norm()) {
        report.failures.push_back("rho(w) not upper triangular on canonical root");
        continue;
      }
      // L_a = w11 s1^-1, with the extra meridian correction for even k.
      Complex l = (k % 2 == 1) ? rw.m11 / s1 : rw.m11 / (s1 * s1 * s1);
      report.max_canonical_residual =
          std::max(report.max_canonical_residual,
                   detail::normalized_residual(tuple.canonical_factor, s1, l));
    }

    // Cyclotomic-type components: v pinned to the appropriate 2cos value.
    int num_cyc = (k % 2 == 1) ? n - 1 : n;
    if (num_cyc > 0) {
      report.has_noncanonical = true;
      int j = 1 + static_cast<int>(unit(rng) * num_cyc);
      j = std::min(j, num_cyc);
      double v0 = (k % 2 == 1) ? 2.0 * std::cos(j * M_PI / n)
                               : 2.0 * std::cos((2 * j - 1) * M_PI / (2 * n + 1));
      // z^2 - xyz + (x^2 + y^2 - 2 - v0) = 0
      Complex bq = -x * y;
      Complex cq = x * x + y * y - 2.0 - v0;
      Complex disc = std::sqrt(bq * bq - 4.0 * cq);
      for (Complex z : {(-bq + disc) / 2.0, (-bq - disc) / 2.0}) {
        Complex u = z - s1 * s2 - 1.0 / (s1 * s2);
        if (std::abs(u) < 1e-6) continue;
        CMat2 rw = detail::rho_numeric(w, u, s1, s2);
        if (std::abs(rw.m21) > 1e-6 * rw.norm()) {
          report.failures.push_back("rho(w) not upper triangular on cyclotomic root");
          continue;
        }
        Complex l = (k % 2 == 1) ? rw.m11 / s1 : rw.m11 / (s1 * s1 * s1);
        double dev = (k % 2 == 1) ? std::abs(l - 1.0)
                                  : std::abs(l * s1 * s1 - 1.0);
        report.max_noncanonical_deviation =
            std::max(report.max_noncanonical_deviation, dev);
      }
    }
  }
  return report;
}

}  // namespace twl

#endif  // TWL_APOLY_HPP
