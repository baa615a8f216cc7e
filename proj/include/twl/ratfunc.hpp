#ifndef TWL_RATFUNC_HPP
#define TWL_RATFUNC_HPP

#include <map>
#include <stdexcept>

#include "twl/laurent.hpp"
#include "twl/polyops.hpp"

namespace twl {

// Quotient of two LaurentPoly. Reduction happens at normalize() boundaries;
// arithmetic keeps products of denominators otherwise.
class RatFunc {
 public:
  RatFunc() : num_(), den_(LaurentPoly::constant(1)) {}

  RatFunc(LaurentPoly num, LaurentPoly den = LaurentPoly::constant(1))
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  }

  static RatFunc variable(Var w) { return RatFunc(V(w)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool is_poly() const {
    return den_.is_constant() || den_.num_terms() == 1;
  }

  // The polynomial value; throws if the denominator is not a unit.
  LaurentPoly as_poly() const {
    return exact_div(num_, den_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc pow(int k) const {
    if (k >= 0) return RatFunc(num_.pow(k), den_.pow(k));
    if (num_.is_zero())
      throw std::domain_error("RatFunc: negative power of zero");
    return RatFunc(den_.pow(-k), num_.pow(-k));
  }

  // Cancel the polynomial GCD plus integer content and common monomial; fix
  // the sign so the denominator's leading coefficient is positive.
  RatFunc normalize() const {
    if (num_.is_zero()) return RatFunc(LaurentPoly(), LaurentPoly::constant(1));
    LaurentPoly g = poly_gcd(num_, den_);
    LaurentPoly n = exact_div(num_, g);
    LaurentPoly d = exact_div(den_, g);
    // Strip the residual common monomial and make d a true polynomial.
    LaurentPoly shift = normalizing_monomial(d);
    n = n * shift;
    d = d * shift;
    if (d.leading_term().second < 0) {
      n = -n;
      d = -d;
    }
    return RatFunc(std::move(n), std::move(d));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const {
    if (den_ == LaurentPoly::constant(1)) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  LaurentPoly num_, den_;
};

// Ring-homomorphic substitution; unbound variables map to themselves.
// Rejects bindings with a zero denominator at construction (RatFunc
// invariant) and zero numerators under negative exponents.
inline RatFunc substitute(const LaurentPoly& p,
                          const std::map<Var, RatFunc>& bind) {
  RatFunc result;
  for (const auto& [e, c] : p.terms()) {
    RatFunc term{LaurentPoly::constant(c)};
    Exponents rest = zero_exponents();
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = bind.find(static_cast<Var>(i));
      if (it == bind.end()) {
        rest[i] = e[i];
      } else {
        term *= it->second.pow(e[i]);
      }
    }
    result += term * RatFunc(LaurentPoly::monomial(rest, 1));
  }
  return result;
}

}  // namespace twl

#endif  // TWL_RATFUNC_HPP
