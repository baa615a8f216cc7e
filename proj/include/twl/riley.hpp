#ifndef TWL_RILEY_HPP
#define TWL_RILEY_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "twl/chebyshev.hpp"
#include "twl/laurent.hpp"
#include "twl/mat2.hpp"
#include "twl/polyops.hpp"
#include "twl/words.hpp"

namespace twl {

// rho(a) = [[s1, 1], [0, s1^-1]], rho(b) = [[s2, 0], [u, s2^-1]].
inline Mat2 rho_letter(Letter l) {
  switch (l) {
    case Letter::a:
      return {V(Var::s1), C(1), C(0), V(Var::s1, -1)};
    case Letter::A:
      return {V(Var::s1, -1), C(-1), C(0), V(Var::s1)};
    case Letter::b:
      return {V(Var::s2), C(0), V(Var::u), V(Var::s2, -1)};
    case Letter::B:
      return {V(Var::s2, -1), C(0), -V(Var::u), V(Var::s2)};
  }
  throw std::logic_error("rho_letter: bad letter");
}

inline Mat2 rho(const GroupWord& w) {
  Mat2 m = Mat2::identity();
  for (Letter l : w.letters) m = m * rho_letter(l);
  return m;
}

// tr rho(bab^-1a^-1) = u(u + s1 s2 + s1^-1 s2^-1 - s1 s2^-1 - s1^-1 s2) + 2.
inline LaurentPoly commutator_trace() {
  LaurentPoly inner = V(Var::u) + V(Var::s1) * V(Var::s2) +
                      V(Var::s1, -1) * V(Var::s2, -1) -
                      V(Var::s1) * V(Var::s2, -1) - V(Var::s1, -1) * V(Var::s2);
  return V(Var::u) * inner + C(2);
}

// rho(w) for W_k through the Chebyshev power shortcut:
// w = c^n a d^n (k odd) or c^n bab d^n (k even), with c = bab^-1a^-1 and
// d = a^-1b^-1ab sharing the trace v.
inline Mat2 rho_twisted_whitehead(const TwistedWhitehead& spec) {
  validate(spec);
  Mat2 c = rho(parse_word("baBA"));
  Mat2 d = rho(parse_word("ABab"));
  LaurentPoly vtr = commutator_trace();
  int n = (spec.k + 1) / 2;
  Mat2 mid = spec.k % 2 == 1 ? rho_letter(Letter::a) : rho(parse_word("bab"));
  return mat_power(c, n, vtr) * mid * mat_power(d, n, vtr);
}

// w_21 entry of rho(w) divided exactly by u. Non-divisibility signals a
// word-construction bug.
inline LaurentPoly riley_from_matrices(const LinkSpec& spec) {
  Mat2 m;
  if (const auto* tw = std::get_if<TwistedWhitehead>(&spec))
    m = rho_twisted_whitehead(*tw);
  else
    m = rho(build_word(spec));
  if (m.m21.is_zero()) return LaurentPoly();
  if (m.m21.min_exp(Var::u) < 1)
    throw std::logic_error("riley_from_matrices: w21 not divisible by u");
  return m.m21 * V(Var::u, -1);
}

// Trace coordinates: x = s1 + s1^-1, y = s2 + s2^-1,
// z = tr rho(ab) = u + s1 s2 + s1^-1 s2^-1.
inline std::map<Var, LaurentPoly> trace_bindings() {
  return {
      {Var::x, V(Var::s1) + V(Var::s1, -1)},
      {Var::y, V(Var::s2) + V(Var::s2, -1)},
      {Var::z, V(Var::u) + V(Var::s1) * V(Var::s2) +
                   V(Var::s1, -1) * V(Var::s2, -1)},
  };
}

// v = x^2 + y^2 + z^2 - xyz - 2, the trace of rho(bab^-1a^-1).
inline LaurentPoly v_in_xyz() {
  LaurentPoly x = V(Var::x), y = V(Var::y), z = V(Var::z);
  return x * x + y * y + z * z - x * y * z - C(2);
}

namespace detail {

// S_m(v) with v expanded in the trace coordinates x, y, z.
inline LaurentPoly cheb_xyz(int m) {
  return cheb(m).substitute_poly({{Var::v, v_in_xyz()}});
}

}  // namespace detail

// Canonical-component polynomial (v expanded):
//   k = 2n-1: (xy - vz) S_{n-1}(v) - (xy - 2z) S_{n-2}(v)
//   k = 2n:   z S_n(v) - (xy - z) S_{n-1}(v)
inline LaurentPoly canonical_poly(const TwistedWhitehead& spec) {
  validate(spec);
  if (spec.k == 0)
    throw std::domain_error("canonical_poly: W_0 is not hyperbolic");
  LaurentPoly x = V(Var::x), y = V(Var::y), z = V(Var::z);
  LaurentPoly vv = v_in_xyz();
  int n = (spec.k + 1) / 2;
  if (spec.k % 2 == 1)
    return (x * y - vv * z) * detail::cheb_xyz(n - 1) -
           (x * y - C(2) * z) * detail::cheb_xyz(n - 2);
  return z * detail::cheb_xyz(n) - (x * y - z) * detail::cheb_xyz(n - 1);
}

struct RileyData {
  LaurentPoly riley_uform;          // in (u, s1, s2): w_21 / u, exact
  LaurentPoly riley_xyz;            // in (x, y, z), v expanded
  std::vector<LaurentPoly> factors; // product reconstructs riley_xyz
};

// Closed-form Riley polynomial of W_k:
//   k = 2n-1: ((xy - vz) S_{n-1} - (xy - 2z) S_{n-2}) * S_{n-1}
//   k = 2n:   (z S_n - (xy - z) S_{n-1}) * (S_n - S_{n-1})
// The second factor is the Chebyshev form of the cyclotomic-type factors
// prod (v - 2cos(j pi / n)) resp. prod (v - 2cos((2j-1) pi / (2n+1))).
inline RileyData riley_closed_form(const TwistedWhitehead& spec) {
  validate(spec);
  LaurentPoly x = V(Var::x), y = V(Var::y), z = V(Var::z);
  LaurentPoly vv = v_in_xyz();
  int n = (spec.k + 1) / 2;
  LaurentPoly core, cyc;
  if (spec.k % 2 == 1) {
    core = (x * y - vv * z) * detail::cheb_xyz(n - 1) -
           (x * y - C(2) * z) * detail::cheb_xyz(n - 2);
    cyc = detail::cheb_xyz(n - 1);
  } else {
    core = z * detail::cheb_xyz(n) - (x * y - z) * detail::cheb_xyz(n - 1);
    cyc = detail::cheb_xyz(n) - detail::cheb_xyz(n - 1);
  }
  RileyData data;
  data.riley_xyz = core * cyc;
  data.riley_uform = riley_from_matrices(LinkSpec{spec});
  data.factors = {core, cyc};
  return data;
}

// Equality up to +-(monomial in the Laurent units): both sides agree after
// monomial/sign/content normalization.
inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return primitive_part(a) == primitive_part(b);
}

}  // namespace twl

#endif  // TWL_RILEY_HPP
