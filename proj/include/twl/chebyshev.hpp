#ifndef TWL_CHEBYSHEV_HPP
#define TWL_CHEBYSHEV_HPP

#include <mutex>
#include <stdexcept>
#include <vector>

#include "twl/laurent.hpp"
#include "twl/mat2.hpp"

namespace twl {

inline Int binomial(long a, long b) {
  if (b < 0 || b > a || a < 0) return 0;
  Int r = 1;
  for (long i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

// Chebyshev polynomial of the second kind S_k(v), exact, all integer k.
// S_0 = 1, S_1 = v, S_k = v S_{k-1} - S_{k-2}; S_{-1} = 0 and
// S_k = -S_{-k-2} for k <= -2. The recurrence is the source of truth;
// nonnegative indices are memoized.
inline LaurentPoly cheb(int k) {
  if (k == -1) return LaurentPoly();
  if (k < -1) return -cheb(-k - 2);
  static std::vector<LaurentPoly> table = {C(1), V(Var::v)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    std::size_t n = table.size();
    table.push_back(V(Var::v) * table[n - 1] - table[n - 2]);
  }
  return table[static_cast<std::size_t>(k)];
}

// Closed form S_k(v) = sum_i (-1)^i C(k-i, k-2i) v^(k-2i), k >= 0.
inline LaurentPoly cheb_closed_form(int k) {
  if (k < 0) throw std::domain_error("cheb_closed_form: negative index");
  LaurentPoly r;
  for (int i = 0; 2 * i <= k; ++i) {
    Int c = binomial(k - i, k - 2 * i);
    if (i % 2 != 0) c = -c;
    r += LaurentPoly::monomial(V(Var::v, k - 2 * i).leading_term().first, c);
  }
  return r;
}

// S_k(2+q) = sum_{i=0}^k C(k+1+i, 2i+1) q^i, k >= 0.
inline LaurentPoly cheb_shifted(int k) {
  if (k < 0) throw std::domain_error("cheb_shifted: negative index");
  LaurentPoly r;
  for (int i = 0; i <= k; ++i)
    r += LaurentPoly::constant(binomial(k + 1 + i, 2 * i + 1)) * V(Var::q, i);
  return r;
}

// V^k = S_{k-1}(v) V - S_{k-2}(v) I for det-1 matrices with trace v; valid
// for any integer k. Callers pass the symbolic trace.
inline Mat2 mat_power(const Mat2& m, int k, const LaurentPoly& v_trace) {
  std::map<Var, LaurentPoly> vb{{Var::v, v_trace}};
  LaurentPoly a = cheb(k - 1).substitute_poly(vb);
  LaurentPoly b = cheb(k - 2).substitute_poly(vb);
  Mat2 r = a * m - b * Mat2::identity();
  return r;
}

}  // namespace twl

#endif  // TWL_CHEBYSHEV_HPP
