#ifndef TWL_LAURENT_HPP
#define TWL_LAURENT_HPP

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace twl {

using Int = boost::multiprecision::cpp_int;

// Fixed variable alphabet. The ordering below is total and shared by every
// polynomial; monomial comparisons treat earlier variables as larger.
enum class Var : int { x = 0, y, z, v, u, s1, s2, M, L, t, q };

inline constexpr int kVarCount = 11;

inline constexpr const char* kVarNames[kVarCount] = {
    "x", "y", "z", "v", "u", "s1", "s2", "M", "L", "t", "q"};

inline const char* var_name(Var w) { return kVarNames[static_cast<int>(w)]; }

inline std::optional<Var> var_from_name(const std::string& name) {
  for (int i = 0; i < kVarCount; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

// Dense signed exponent vector over the fixed alphabet.
using Exponents = std::array<int, kVarCount>;

inline Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Graded-lexicographic order: total degree first, ties broken by the first
// differing variable (earlier alphabet position wins with the larger
// exponent). Deterministic across runs.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < kVarCount; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Int, GrlexLess>;

  LaurentPoly() = default;

  static LaurentPoly constant(Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(zero_exponents(), std::move(c));
    return p;
  }
  static LaurentPoly constant(long c) { return constant(Int(c)); }

  static LaurentPoly variable(Var w, int exp = 1) {
    Exponents e = zero_exponents();
    e[static_cast<int>(w)] = exp;
    return monomial(e, 1);
  }

  static LaurentPoly monomial(const Exponents& e, Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == zero_exponents());
  }

  Int constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("constant_value: not constant");
    return terms_.begin()->second;
  }

  // Leading term under graded-lex (largest monomial).
  const std::pair<const Exponents, Int>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero");
    return *terms_.rbegin();
  }

  bool uses(Var w) const {
    int i = static_cast<int>(w);
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) return true;
    return false;
  }

  std::vector<Var> used_vars() const {
    std::vector<Var> out;
    for (int i = 0; i < kVarCount; ++i)
      if (uses(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
  }

  // Max exponent of w; 0 for the zero polynomial or an absent variable.
  int degree_in(Var w) const {
    int i = static_cast<int>(w), d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  // Min exponent of w over all terms; 0 if absent or zero polynomial.
  int min_exp(Var w) const {
    if (terms_.empty()) return 0;
    int i = static_cast<int>(w);
    int m = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
    return m;
  }

  void add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
    return LaurentPoly::constant(c) * a;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly pow(int k) const {
    if (k < 0) {
      if (terms_.size() != 1)
        throw std::domain_error("pow: negative power of a non-monomial");
      const auto& [e, c] = *terms_.begin();
      if (c != 1 && c != -1)
        throw std::domain_error("pow: negative power of a non-unit");
      Exponents ie;
      for (int i = 0; i < kVarCount; ++i) ie[i] = -e[i];
      LaurentPoly inv = monomial(ie, c);  // c in {1,-1} is its own inverse
      return inv.pow(-k);
    }
    LaurentPoly r = constant(1);
    LaurentPoly base = *this;
    int n = k;
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  LaurentPoly derivative(Var w) const {
    int i = static_cast<int>(w);
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents de = e;
      de[i] -= 1;
      r.add_term(de, c * e[i]);
    }
    return r;
  }

  // Substitution by polynomial values. Unbound variables stay themselves. A
  // bound variable occurring with a negative exponent is only accepted when
  // its binding is an invertible monomial.
  LaurentPoly substitute_poly(const std::map<Var, LaurentPoly>& bind) const {
    LaurentPoly result;
    for (const auto& [e, c] : terms_) {
      LaurentPoly term = constant(c);
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
      result += term * monomial(rest, 1);
    }
    return result;
  }

  // Complex evaluation, Horner per variable (highest alphabet position
  // first). Negative exponents at a zero value raise a pole error.
  std::complex<double> eval_complex(
      const std::map<Var, std::complex<double>>& point) const {
    if (terms_.empty()) return 0.0;
    for (Var w : used_vars())
      if (!point.count(w))
        throw std::invalid_argument(std::string("eval_complex: unbound ") +
                                    var_name(w));
    return eval_rec(*this, point);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Int& c = it->second;
      Int ac = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::string mono = monomial_string(it->first);
      if (mono.empty()) {
        os << ac.str();
      } else {
        if (ac != 1) os << ac.str() << "*";
        os << mono;
      }
    }
    return os.str();
  }

  // {"vars": [...], "terms": [{"coef": "...", "exps": [...]}, ...]}
  // coefficients as decimal strings, terms in descending graded-lex order.
  nlohmann::json to_json() const {
    std::vector<Var> vars = used_vars();
    nlohmann::json jvars = nlohmann::json::array();
    for (Var w : vars) jvars.push_back(var_name(w));
    nlohmann::json jterms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      nlohmann::json exps = nlohmann::json::array();
      for (Var w : vars) exps.push_back(it->first[static_cast<int>(w)]);
      jterms.push_back({{"coef", it->second.str()}, {"exps", exps}});
    }
    return {{"vars", jvars}, {"terms", jterms}};
  }

  static LaurentPoly from_json(const nlohmann::json& j) {
    std::vector<Var> vars;
    for (const auto& name : j.at("vars")) {
      auto w = var_from_name(name.get<std::string>());
      if (!w) throw std::invalid_argument("from_json: unknown variable");
      vars.push_back(*w);
    }
    LaurentPoly p;
    for (const auto& t : j.at("terms")) {
      Exponents e = zero_exponents();
      const auto& exps = t.at("exps");
      for (std::size_t i = 0; i < vars.size(); ++i)
        e[static_cast<int>(vars[i])] = exps.at(i).get<int>();
      p.add_term(e, Int(t.at("coef").get<std::string>()));
    }
    return p;
  }

 private:
  static std::string monomial_string(const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!first) os << "*";
      first = false;
      os << kVarNames[i];
      if (e[i] != 1) os << "^" << e[i];
    }
    return os.str();
  }

  static std::complex<double> eval_rec(
      const LaurentPoly& p, const std::map<Var, std::complex<double>>& point) {
    if (p.terms_.empty()) return 0.0;
    // Find a present variable; constants fall through.
    int vi = -1;
    for (const auto& [e, c] : p.terms_)
      for (int i = 0; i < kVarCount && vi < 0; ++i)
        if (e[i] != 0) vi = i;
    if (vi < 0) {
      const Int& c = p.terms_.begin()->second;
      return std::complex<double>(static_cast<double>(c));
    }
    Var w = static_cast<Var>(vi);
    std::complex<double> val = point.at(w);
    // Group by exponent of w.
    std::map<int, LaurentPoly> groups;
    for (const auto& [e, c] : p.terms_) {
      Exponents re = e;
      int k = re[vi];
      re[vi] = 0;
      groups[k].add_term(re, c);
    }
    int lo = groups.begin()->first;
    if (lo < 0 && val == std::complex<double>(0.0))
      throw std::domain_error(
          std::string("eval_complex: pole, zero bound to negative power of ") +
          var_name(w));
    // Horner from the top exponent down to lo, then correct by val^lo.
    int hi = groups.rbegin()->first;
    std::complex<double> acc = 0.0;
    for (int k = hi; k >= lo; --k) {
      acc *= val;
      auto it = groups.find(k);
      if (it != groups.end()) acc += eval_rec(it->second, point);
    }
    if (lo != 0) acc *= std::pow(val, lo);
    return acc;
  }

  TermMap terms_;
};

inline LaurentPoly operator*(const LaurentPoly& a, long c) {
  return LaurentPoly::constant(c) * a;
}
inline LaurentPoly operator*(long c, const LaurentPoly& a) {
  return LaurentPoly::constant(c) * a;
}

// Convenience factory, e.g. V(Var::M, -1) for M^-1.
inline LaurentPoly V(Var w, int exp = 1) {
  return LaurentPoly::variable(w, exp);
}

inline LaurentPoly C(long c) { return LaurentPoly::constant(c); }

}  // namespace twl

#endif  // TWL_LAURENT_HPP
