#include "ifm/matrix2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifm {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Matrix2::Matrix2(Complex m00, Complex m01, Complex m10, Complex m11)
    : m00_(m00), m01_(m01), m10_(m10), m11_(m11) {
  if (!finite(m00) || !finite(m01) || !finite(m10) || !finite(m11)) {
    throw std::domain_error("Matrix2: non-finite entry");
  }
}

Complex Matrix2::operator()(int row, int col) const {
  if (row == 0 && col == 0) return m00_;
  if (row == 0 && col == 1) return m01_;
  if (row == 1 && col == 0) return m10_;
  if (row == 1 && col == 1) return m11_;
  throw std::out_of_range("Matrix2: index out of range");
}

Matrix2 Matrix2::operator*(const Matrix2& rhs) const {
  return {m00_ * rhs.m00_ + m01_ * rhs.m10_, m00_ * rhs.m01_ + m01_ * rhs.m11_,
          m10_ * rhs.m00_ + m11_ * rhs.m10_, m10_ * rhs.m01_ + m11_ * rhs.m11_};
}

Vector2 Matrix2::operator*(const Vector2& v) const {
  return {m00_ * v[0] + m01_ * v[1], m10_ * v[0] + m11_ * v[1]};
}

Matrix2 Matrix2::adjoint() const {
  return {std::conj(m00_), std::conj(m10_), std::conj(m01_), std::conj(m11_)};
}

double Matrix2::max_abs_diff(const Matrix2& other) const noexcept {
  return std::max({std::abs(m00_ - other.m00_), std::abs(m01_ - other.m01_),
                   std::abs(m10_ - other.m10_), std::abs(m11_ - other.m11_)});
}

Complex ipow(Complex base, long long exponent) {
  if (exponent < 0) {
    return 1.0 / ipow(base, -exponent);
  }
  Complex result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace ifm
