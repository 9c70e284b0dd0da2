#pragma once

#include <array>
#include <complex>

namespace ifm {

using Complex = std::complex<double>;

/// Column vector in the {|0>, |1>} path basis.
using Vector2 = std::array<Complex, 2>;

/// 2x2 matrix over complex doubles. Every constructor and product rejects
/// non-finite entries with std::domain_error.
class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(Complex m00, Complex m01, Complex m10, Complex m11);

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex m00() const noexcept { return m00_; }
  Complex m01() const noexcept { return m01_; }
  Complex m10() const noexcept { return m10_; }
  Complex m11() const noexcept { return m11_; }

  /// Entry access by (row, col), both in {0, 1}.
  Complex operator()(int row, int col) const;

  Matrix2 operator*(const Matrix2& rhs) const;
  Vector2 operator*(const Vector2& v) const;

  Matrix2 transpose() const { return {m00_, m10_, m01_, m11_}; }
  Matrix2 adjoint() const;

  Complex trace() const noexcept { return m00_ + m11_; }
  Complex determinant() const noexcept { return m00_ * m11_ - m01_ * m10_; }

  /// Largest entrywise modulus of (*this - other).
  double max_abs_diff(const Matrix2& other) const noexcept;

  bool operator==(const Matrix2&) const = default;

 private:
  Complex m00_{};
  Complex m01_{};
  Complex m10_{};
  Complex m11_{};
};

/// Integer power by repeated squaring.
Complex ipow(Complex base, long long exponent);

}  // namespace ifm
