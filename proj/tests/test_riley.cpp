#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "twl/numeric.hpp"
#include "twl/polyops.hpp"
#include "twl/riley.hpp"
#include "twl/words.hpp"

using namespace twl;

namespace {

LaurentPoly s1gen() { return V(Var::s1); }
LaurentPoly s1inv() { return V(Var::s1, -1); }
LaurentPoly s2gen() { return V(Var::s2); }
LaurentPoly s2inv() { return V(Var::s2, -1); }
LaurentPoly ugen() { return V(Var::u); }

// Coefficients of p, viewed as a polynomial in u, evaluated at (s1, s2).
std::vector<Complex> u_coeffs_at(const LaurentPoly& p, Complex s1, Complex s2) {
  auto coeffs = detail::coeffs_in(p, Var::u);
  std::vector<Complex> out;
  for (const auto& c : coeffs)
    out.push_back(c.eval_complex({{Var::s1, s1}, {Var::s2, s2}}));
  return out;
}

}  // namespace

TEST_CASE("word construction: small cases") {
  CHECK(build_word(LinkSpec{TwistedWhitehead{0}}) == parse_word("bab"));
  CHECK(build_word(LinkSpec{TwistedWhitehead{1}}) == parse_word("baBAaABab"));
  CHECK(build_word(LinkSpec{TwistedWhitehead{1}}).reduced() ==
        parse_word("baBABab"));
  CHECK(build_word(LinkSpec{TwoBridge{8, 3}}) == parse_word("baBABab"));
  // b(2p, q) words are palindromic: eps_i = eps_{2p-i}.
  for (long two_p : {8L, 12L, 16L, 20L}) {
    long q = two_p / 2 - 1;
    auto w = build_word(LinkSpec{TwoBridge{two_p, q}}).letters;
    for (std::size_t i = 0; i < w.size(); ++i)
      CHECK(w[i] == w[w.size() - 1 - i]);
  }
}

TEST_CASE("word construction: validation") {
  CHECK_THROWS_AS(build_word(LinkSpec{TwistedWhitehead{-1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_word(LinkSpec{TwoBridge{8, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_word(LinkSpec{TwoBridge{9, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(build_word(LinkSpec{TwoBridge{6, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_word(LinkSpec{TwoBridge{6, 7}}), std::invalid_argument);
}

TEST_CASE("two-bridge normal form reproduces the twist words") {
  for (int k = 0; k <= 4; ++k) {
    auto tw = build_word(LinkSpec{TwistedWhitehead{k}}).reduced();
    auto tb = build_word(LinkSpec{to_two_bridge(TwistedWhitehead{k})});
    CHECK(tw == tb);
  }
}

TEST_CASE("representation matrices: entry fixtures for c = rho(baBA)") {
  Mat2 c = rho(parse_word("baBA"));
  CHECK(c.m11 == C(1) - s1inv() * s2gen() * ugen());
  CHECK(c.m12 == -s1gen() + s1gen() * s2gen() * s2gen() + s2gen() * ugen());
  CHECK(c.m21 == ugen() * (-V(Var::s1, -2) * s2inv() + s2inv() -
                           s1inv() * ugen()));
  CHECK(c.m22 ==
        C(1) +
            (s1inv() * s2inv() - s1gen() * s2inv() + s1gen() * s2gen()) *
                ugen() +
            ugen() * ugen());
}

TEST_CASE("representation matrices: entry fixtures for d = rho(ABab)") {
  Mat2 d = rho(parse_word("ABab"));
  CHECK(d.m11 ==
        C(1) +
            (s1inv() * s2inv() - s1inv() * s2gen() + s1gen() * s2gen()) *
                ugen() +
            ugen() * ugen());
  CHECK(d.m12 == s1inv() * V(Var::s2, -2) - s1inv() + s2inv() * ugen());
  CHECK(d.m21 == ugen() * (s2gen() - V(Var::s1, 2) * s2gen() - s1gen() * ugen()));
  CHECK(d.m22 == C(1) - s1gen() * s2inv() * ugen());
}

TEST_CASE("commutator trace fixture and det = 1") {
  Mat2 c = rho(parse_word("baBA"));
  CHECK(c.trace() == commutator_trace());
  CHECK(c.det() == C(1));
  CHECK(rho(parse_word("ABab")).trace() == commutator_trace());
  CHECK(rho(parse_word("ab")).trace() ==
        ugen() + s1gen() * s2gen() + s1inv() * s2inv());
}

TEST_CASE("Chebyshev shortcut equals the literal word product") {
  for (int k = 0; k <= 5; ++k) {
    Mat2 direct = rho(build_word(LinkSpec{TwistedWhitehead{k}}));
    Mat2 shortcut = rho_twisted_whitehead(TwistedWhitehead{k});
    CHECK(direct == shortcut);
  }
}

TEST_CASE("Riley polynomial of W_0") {
  LaurentPoly r = riley_from_matrices(LinkSpec{TwistedWhitehead{0}});
  CHECK(r == ugen() + s1gen() * s2gen() + s1inv() * s2inv());
}

TEST_CASE("Riley closed form: small fixtures in trace coordinates") {
  LaurentPoly x = V(Var::x), y = V(Var::y), z = V(Var::z);
  LaurentPoly v = v_in_xyz();
  auto d1 = riley_closed_form(TwistedWhitehead{1});
  CHECK(d1.riley_xyz == x * y - v * z);
  auto d2 = riley_closed_form(TwistedWhitehead{2});
  CHECK(d2.riley_xyz == (z * v - (x * y - z)) * (v - C(1)));
  CHECK(d2.factors.size() == 2);
  CHECK(d2.factors[0] * d2.factors[1] == d2.riley_xyz);
}

TEST_CASE("closed form equals the matrix entry for k = 0..8") {
  auto bind = trace_bindings();
  for (int k = 0; k <= 8; ++k) {
    LaurentPoly from_word = riley_from_matrices(LinkSpec{TwistedWhitehead{k}});
    LaurentPoly closed;
    if (k == 0) {
      closed = V(Var::z);
    } else {
      closed = riley_closed_form(TwistedWhitehead{k}).riley_xyz;
    }
    LaurentPoly expanded = closed.substitute_poly(bind);
    CHECK(equal_up_to_unit(expanded, from_word));
  }
}

TEST_CASE("palindromic symmetry of the word entries") {
  // For the palindromic relator words (odd length, starting/ending in b):
  //   w11 - w22 = (s1 - s1^-1) w12 + (s2 - s2^-1) w21 / u,
  // so rho(aw) = rho(wa) collapses to the single equation w21 / u = 0.
  for (int k = 0; k <= 5; ++k) {
    Mat2 m = rho(build_word(LinkSpec{TwistedWhitehead{k}}));
    LaurentPoly lhs = m.m11 - m.m22;
    LaurentPoly rhs = (s1gen() - s1inv()) * m.m12 +
                      (s2gen() - s2inv()) * m.m21 * V(Var::u, -1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Riley polynomial is symmetric in s1 and s2") {
  std::map<Var, LaurentPoly> swap12{{Var::s1, V(Var::s2)},
                                    {Var::s2, V(Var::s1)}};
  for (int k = 0; k <= 5; ++k) {
    LaurentPoly r = riley_from_matrices(LinkSpec{TwistedWhitehead{k}});
    CHECK(r == r.substitute_poly(swap12));
  }
}

TEST_CASE("riley roots give representations with rho(aw) = rho(wa)") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> re(-1.2, 1.2);
  for (int k = 1; k <= 3; ++k) {
    LaurentPoly riley = riley_from_matrices(LinkSpec{TwistedWhitehead{k}});
    GroupWord w = build_word(LinkSpec{TwistedWhitehead{k}});
    GroupWord aw;
    aw.append(Letter::a).append(w);
    GroupWord wa = w;
    wa.append(Letter::a);
    for (int trial = 0; trial < 5; ++trial) {
      Complex s1(re(rng), re(rng)), s2(re(rng), re(rng));
      if (std::abs(s1) < 0.2 || std::abs(s2) < 0.2) continue;
      auto coeffs = u_coeffs_at(riley, s1, s2);
      for (Complex u : poly_roots(coeffs)) {
        std::map<Var, Complex> pt{{Var::s1, s1}, {Var::s2, s2}, {Var::u, u}};
        auto entry = [&](const GroupWord& g) {
          Mat2 m = rho(g);
          return std::array<Complex, 4>{
              m.m11.eval_complex(pt), m.m12.eval_complex(pt),
              m.m21.eval_complex(pt), m.m22.eval_complex(pt)};
        };
        auto L = entry(aw), R = entry(wa);
        double diff = 0, scale = 1;
        for (int i = 0; i < 4; ++i) {
          diff = std::max(diff, std::abs(L[i] - R[i]));
          scale = std::max(scale, std::abs(L[i]));
        }
        CHECK(diff / scale < 1e-8);
      }
    }
  }
}

TEST_CASE("canonical_poly fixtures and W_0 rejection") {
  LaurentPoly x = V(Var::x), y = V(Var::y), z = V(Var::z);
  CHECK(canonical_poly(TwistedWhitehead{1}) == x * y - v_in_xyz() * z);
  CHECK(canonical_poly(TwistedWhitehead{2}) ==
        z * v_in_xyz() - (x * y - z));
  CHECK_THROWS_AS(canonical_poly(TwistedWhitehead{0}), std::domain_error);
}

TEST_CASE("canonical factor divides the full Riley polynomial") {
  for (int k = 1; k <= 6; ++k) {
    auto data = riley_closed_form(TwistedWhitehead{k});
    CHECK(divides(canonical_poly(TwistedWhitehead{k}), data.riley_xyz));
  }
}
