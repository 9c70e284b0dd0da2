#pragma once

#include "ifm/interferometer.hpp"
#include "ifm/matrix2.hpp"

namespace ifm {

/// Below this, |s|, |t| or |x - z| are treated as zero.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Schur-type triangularization of one chain period M = BA:
///
///   U^T M U = D = [[x, y], [0, z]]
///
/// with r = sqrt((1 - sqrt(eta))^2 cos^2(theta) - 4 sqrt(eta) sin^2(theta))
/// taken as the principal complex root. x and z are the eigenvalues of M
/// (x + z = trace, x z = det = sqrt(eta)). The first column of U is the
/// eigenvector for x; the second column is its orthogonal complement.
///
/// U satisfies U^T U = I. For real r it is a real rotation, so U^T = U^dagger.
/// For complex r (eta close to 1 or theta large) U is complex-orthogonal but
/// not unitary, and only the transpose inverts it.
struct TriangularDecomposition {
  Complex r;
  Complex s;
  Complex t;
  Complex x;
  Complex y;
  Complex z;
  Matrix2 u;
  double theta = 0.0;
  double eta = 0.0;

  Matrix2 upper() const { return {x, y, 0.0, z}; }
};

/// Throws DegenerateDecomposition when |s| or |t| falls below
/// kDegeneracyTolerance times the squared Hermitian norm of the matching
/// column of U (always the case at eta = 1).
TriangularDecomposition triangularize(double eta, double theta);

/// D^n = [[X, Y], [0, Z]].
struct ChainPower {
  Complex X{1.0};
  Complex Y{0.0};
  Complex Z{1.0};
  int n = 0;

  Matrix2 matrix() const { return {X, Y, 0.0, Z}; }
};

/// X = x^n, Z = z^n, and for n >= 2
///   Y = y (x^{n-1} + z^{n-1}) + x y z (x^{n-2} - z^{n-2}) / (x - z).
/// The quotient is replaced by its limit when |x - z| < kDegeneracyTolerance.
ChainPower chain_power(const TriangularDecomposition& decomp, int n);

struct ClosedFormResult {
  double probability = 0.0;
  /// The decomposition was degenerate and the direct product was used.
  bool fallback_used = false;
};

/// |<1| U D^{N-1} U^T B |1>|^2.
ClosedFormResult closed_form_success_probability(const InterferometerConfig& config);

/// 1 - (pi^2/4) (1 + sqrt(eta)) / (1 - sqrt(eta)) / N, clamped below at 0.
/// Throws std::invalid_argument for n < 1 or eta outside [0, 1).
double approx_success_probability(int n, double eta);

/// (pi^2/4) (1 + sqrt(eta)) / (1 - sqrt(eta)): the limit of N (1 - P).
double asymptotic_slope(double eta);

}  // namespace ifm
