#ifndef TWL_NUMERIC_HPP
#define TWL_NUMERIC_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace twl {

using Complex = std::complex<double>;

inline Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline Complex horner_derivative(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;)
    acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

// All roots of a complex polynomial (ascending coefficients) via the
// companion matrix, followed by Newton polishing to ~1e-12 residual.
inline std::vector<Complex> poly_roots(std::vector<Complex> coeffs) {
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  int n = static_cast<int>(coeffs.size()) - 1;
  Complex lead = coeffs.back();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: eigenvalue solver failed");
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Complex z = solver.eigenvalues()(i);
    for (int it = 0; it < 50; ++it) {
      Complex f = horner(coeffs, z);
      if (std::abs(f) < 1e-14) break;
      Complex df = horner_derivative(coeffs, z);
      if (std::abs(df) == 0.0) break;
      Complex step = f / df;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

// Minimal complex 2x2 matrix for numerical representation checks.
struct CMat2 {
  Complex m11, m12, m21, m22;

  static CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  friend CMat2 operator*(const CMat2& a, const CMat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }

  friend CMat2 operator-(const CMat2& a, const CMat2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
  }

  double norm() const {
    return std::abs(m11) + std::abs(m12) + std::abs(m21) + std::abs(m22);
  }
};

}  // namespace twl

#endif  // TWL_NUMERIC_HPP
