#ifndef TWL_MAT2_HPP
#define TWL_MAT2_HPP

#include "twl/laurent.hpp"

namespace twl {

// 2x2 matrix with LaurentPoly entries; carries symbolic rho(word) products.
struct Mat2 {
  LaurentPoly m11, m12, m21, m22;

  static Mat2 identity() {
    return {C(1), C(0), C(0), C(1)};
  }

  LaurentPoly trace() const { return m11 + m22; }
  LaurentPoly det() const { return m11 * m22 - m12 * m21; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
  }

  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
  }

  friend Mat2 operator*(const LaurentPoly& s, const Mat2& a) {
    return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
  }

  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.m11 == b.m11 && a.m12 == b.m12 && a.m21 == b.m21 && a.m22 == b.m22;
  }
};

}  // namespace twl

#endif  // TWL_MAT2_HPP
