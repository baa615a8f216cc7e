#ifndef TWL_VOLUME_HPP
#define TWL_VOLUME_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twl/numeric.hpp"

namespace twl {

// R_{W_k}(s, z) as a real-coefficient polynomial in z at s = e^{i omega/2}:
//   k = 2n-1: x^2 S_{n-1}(v) - z S_n(v) - (x^2 - z) S_{n-2}(v)
//   k = 2n:   z S_n(v) - (x^2 - z) S_{n-1}(v)
// with x = s + s^-1 and v = 2x^2 + z^2 - x^2 z - 2.

namespace detail {

inline std::vector<Complex> conv(const std::vector<Complex>& a,
                                 const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<Complex> add(std::vector<Complex> a,
                                const std::vector<Complex>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline std::vector<Complex> scale(std::vector<Complex> a, Complex c) {
  for (auto& x : a) x *= c;
  return a;
}

// S_m(v(z)) as a coefficient vector in z; m >= -1.
inline std::vector<Complex> cheb_of_v(int m, const std::vector<Complex>& v) {
  if (m == -1) return {Complex(0.0)};
  std::vector<Complex> prev = {Complex(0.0)};  // S_{-1}
  std::vector<Complex> cur = {Complex(1.0)};   // S_0
  for (int i = 0; i < m; ++i) {
    std::vector<Complex> next = add(conv(v, cur), scale(prev, -1.0));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

// Ascending real coefficients of R_{W_k}(e^{i omega/2}, z). An imaginary
// residue beyond tolerance signals a formula bug and raises.
inline std::vector<double> r_poly(int k, double omega) {
  if (k < 1) throw std::domain_error("r_poly: need k >= 1");
  if (!(omega > 0.0 && omega <= M_PI))
    throw std::domain_error("r_poly: omega must lie in (0, pi]");
  Complex s = std::polar(1.0, omega / 2.0);
  Complex x = s + 1.0 / s;
  Complex x2 = x * x;
  std::vector<Complex> v = {2.0 * x2 - 2.0, -x2, 1.0};  // v(z)
  int n = (k + 1) / 2;
  std::vector<Complex> r;
  if (k % 2 == 1) {
    auto sn = detail::cheb_of_v(n, v);
    auto sn1 = detail::cheb_of_v(n - 1, v);
    auto sn2 = detail::cheb_of_v(n - 2, v);
    // x^2 S_{n-1} - z S_n - x^2 S_{n-2} + z S_{n-2}
    r = detail::scale(sn1, x2);
    r = detail::add(r, detail::conv({Complex(0.0), Complex(-1.0)}, sn));
    r = detail::add(r, detail::scale(sn2, -x2));
    r = detail::add(r, detail::conv({Complex(0.0), Complex(1.0)}, sn2));
  } else {
    auto sn = detail::cheb_of_v(n, v);
    auto sn1 = detail::cheb_of_v(n - 1, v);
    // z S_n - x^2 S_{n-1} + z S_{n-1}
    r = detail::conv({Complex(0.0), Complex(1.0)}, sn);
    r = detail::add(r, detail::scale(sn1, -x2));
    r = detail::add(r, detail::conv({Complex(0.0), Complex(1.0)}, sn1));
  }
  std::vector<double> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    double tol = 1e-12 * std::max(1.0, std::abs(r[i]));
    if (std::abs(r[i].imag()) > tol)
      throw std::runtime_error("r_poly: non-real coefficient at omega=" +
                               std::to_string(omega));
    out[i] = r[i].real();
  }
  while (out.size() > 1 && out.back() == 0.0) out.pop_back();
  return out;
}

// 2 log | (z - (s^-2 + 1)) / (z - (s^2 + 1)) | at s = e^{i omega/2}.
inline double integrand_at(double omega, Complex z) {
  Complex s2 = std::polar(1.0, omega);  // s^2
  Complex num = z - (1.0 / s2 + 1.0);
  Complex den = z - (s2 + 1.0);
  if (std::abs(den) == 0.0)
    throw std::domain_error("integrand: root collided with the pole s^2 + 1");
  return 2.0 * std::log(std::abs(num) / std::abs(den));
}

struct RootChoice {
  Complex z;
  bool real_regime = false;  // all roots real: integrand vanishes
  bool tie_event = false;    // two roots tied for maximal integrand
};

inline constexpr double kRealAxisTol = 1e-10;

// Among roots with Im z >= 0, pick the one maximizing the integrand; roots
// within 1e-10 of the real axis count as real. Ties go to the larger Im z.
inline RootChoice choose_root(int k, double omega) {
  std::vector<double> rc = r_poly(k, omega);
  std::vector<Complex> cc(rc.begin(), rc.end());
  std::vector<Complex> roots = poly_roots(cc);
  if (roots.empty()) throw std::runtime_error("choose_root: no roots");
  RootChoice choice;
  bool found = false;
  double best = -1.0;
  for (Complex z : roots) {
    if (z.imag() <= kRealAxisTol) continue;
    double val = integrand_at(omega, z);
    if (found && std::abs(val - best) < 1e-12) {
      choice.tie_event = true;
      if (z.imag() > choice.z.imag()) choice.z = z;
      continue;
    }
    if (!found || val > best) {
      best = val;
      choice.z = z;
      found = true;
    }
  }
  if (!found) {
    choice.real_regime = true;
    // Deterministic representative: the largest real part.
    choice.z = *std::max_element(roots.begin(), roots.end(),
                                 [](Complex a, Complex b) {
                                   return a.real() < b.real();
                                 });
    choice.z = Complex(choice.z.real(), 0.0);
  }
  return choice;
}

inline double integrand(int k, double omega) {
  RootChoice c = choose_root(k, omega);
  return c.real_regime ? 0.0 : integrand_at(omega, c.z);
}

struct VolumeSample {
  double omega = 0.0;
  Complex z;
  double integrand = 0.0;
};

struct VolumeCurve {
  std::vector<VolumeSample> samples;  // ordered by omega
  double volume = 0.0;
  double alpha = 0.0;
  int k = 0;
  double quadrature_error_estimate = 0.0;
  std::vector<std::string> warnings;
};

namespace detail {

struct QuadState {
  int k;
  std::vector<VolumeSample>* samples;
  std::vector<std::string>* warnings;
  double err_accum = 0.0;
  long evals = 0;
};

inline VolumeSample eval_sample(QuadState& st, double omega) {
  if (++st.evals > 2'000'000)
    throw std::runtime_error("volume: quadrature evaluation budget exceeded");
  RootChoice c = choose_root(st.k, omega);
  VolumeSample s{omega, c.z, c.real_regime ? 0.0 : integrand_at(omega, c.z)};
  st.samples->push_back(s);
  return s;
}

// Root jump larger than 0.5 without a matching conjugate collision, on an
// interval already refined below 1e-3. Coarse spans resolve themselves, and
// the regime transition (integrand 0 on one side) is an expected switch.
inline void monitor(QuadState& st, const VolumeSample& a, const VolumeSample& b) {
  if (b.omega - a.omega > 1e-3) return;
  if (a.integrand == 0.0 || b.integrand == 0.0) return;
  if (std::abs(a.z - b.z) > 0.5 && std::abs(a.z - std::conj(b.z)) > 0.5 &&
      st.warnings->size() < 32) {
    st.warnings->push_back("root jump between omega=" + std::to_string(a.omega) +
                           " and omega=" + std::to_string(b.omega));
  }
}

inline double adaptive_simpson(QuadState& st, const VolumeSample& a,
                               const VolumeSample& m, const VolumeSample& b,
                               double whole, double tol, int depth) {
  VolumeSample lm = eval_sample(st, 0.5 * (a.omega + m.omega));
  VolumeSample rm = eval_sample(st, 0.5 * (m.omega + b.omega));
  monitor(st, a, lm);
  monitor(st, lm, m);
  monitor(st, m, rm);
  monitor(st, rm, b);
  double h = b.omega - a.omega;
  double left = (h / 12.0) * (a.integrand + 4.0 * lm.integrand + m.integrand);
  double right = (h / 12.0) * (m.integrand + 4.0 * rm.integrand + b.integrand);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    st.err_accum += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(st, a, lm, m, left, tol / 2.0, depth - 1) +
         adaptive_simpson(st, m, rm, b, right, tol / 2.0, depth - 1);
}

}  // namespace detail

// Vol E_{W_k}(alpha) = int_alpha^pi 2 log|...| d omega, adaptive Simpson to
// absolute tolerance `tol` (default 1e-9).
inline VolumeCurve volume(int k, double alpha, double tol = 1e-9) {
  if (k < 1) throw std::domain_error("volume: need k >= 1");
  if (!(alpha > 0.0 && alpha <= M_PI))
    throw std::domain_error("volume: alpha must lie in (0, pi]");
  VolumeCurve curve;
  curve.k = k;
  curve.alpha = alpha;
  if (alpha == M_PI) return curve;  // empty interval
  detail::QuadState st{k, &curve.samples, &curve.warnings};
  VolumeSample a = detail::eval_sample(st, alpha);
  VolumeSample b = detail::eval_sample(st, M_PI);
  VolumeSample m = detail::eval_sample(st, 0.5 * (alpha + M_PI));
  double h = M_PI - alpha;
  double whole = (h / 6.0) * (a.integrand + 4.0 * m.integrand + b.integrand);
  curve.volume = detail::adaptive_simpson(st, a, m, b, whole, tol, 48);
  curve.quadrature_error_estimate = st.err_accum;
  std::sort(curve.samples.begin(), curve.samples.end(),
            [](const VolumeSample& p, const VolumeSample& q) {
              return p.omega < q.omega;
            });
  return curve;
}

// Volume of the r-fold cyclic branched cover, r >= 3.
inline double cyclic_cover_volume(int k, int r, double tol = 1e-9) {
  if (r < 3) throw std::domain_error("cyclic_cover_volume: need r >= 3");
  return r * volume(k, 2.0 * M_PI / r, tol).volume;
}

// Transition angle between the nonreal-root regime (hyperbolic, integrand
// positive) and the all-real-root regime, located by bisection to 1e-8.
// The result must land in [2pi/3, pi).
inline double estimate_alpha_bound(int k) {
  auto has_nonreal = [k](double omega) {
    std::vector<double> rc = r_poly(k, omega);
    std::vector<Complex> cc(rc.begin(), rc.end());
    for (Complex z : poly_roots(cc))
      if (std::abs(z.imag()) > kRealAxisTol) return true;
    return false;
  };
  double lo = -1.0, hi = -1.0;
  const int grid = 512;
  for (int i = 1; i < grid; ++i) {
    double omega = M_PI * i / grid;
    if (has_nonreal(omega))
      lo = omega;
    else if (lo > 0.0) {
      hi = omega;
      break;
    }
  }
  if (lo < 0.0 || hi < 0.0)
    throw std::runtime_error("estimate_alpha_bound: no regime transition found");
  while (hi - lo > 1e-8) {
    double mid = 0.5 * (lo + hi);
    (has_nonreal(mid) ? lo : hi) = mid;
  }
  double bound = 0.5 * (lo + hi);
  if (!(bound >= 2.0 * M_PI / 3.0 - 1e-6 && bound < M_PI))
    throw std::runtime_error("estimate_alpha_bound: estimate outside [2pi/3, pi)");
  return bound;
}

// Alternate route to the same integrand through the symmetric slice
// s1 = s2 = e^{i w/2}: 2 log |(-1 - s^2 + s^2 z) / (s + s^3 - s z)|.
inline double integrand_symmetric(double omega, Complex z) {
  Complex s = std::polar(1.0, omega / 2.0);
  Complex num = -1.0 - s * s + s * s * z;
  Complex den = s + s * s * s - s * z;
  return 2.0 * std::log(std::abs(num) / std::abs(den));
}

}  // namespace twl

#endif  // TWL_VOLUME_HPP
