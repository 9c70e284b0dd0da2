#include "ifm/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ifm/errors.hpp"
#include "ifm/expansion.hpp"

namespace ifm {

TriangularDecomposition triangularize(double eta, double theta) {
  validate_eta(eta);
  validate_theta(theta);

  const double root_eta = std::sqrt(eta);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double a = (1.0 - root_eta) * c;

  TriangularDecomposition d;
  d.theta = theta;
  d.eta = eta;
  d.r = std::sqrt(Complex(a * a - 4.0 * root_eta * sn * sn));
  d.s = 4.0 * eta * sn * sn + (a + d.r) * (a + d.r);
  d.t = 4.0 * sn * sn + (a - d.r) * (a - d.r);
  // s and t are bilinear squared norms of U's columns. They vanish against the
  // Hermitian norms only where U stops being invertible (eta = 1, or eta = 0 at
  // theta = pi/2); small theta alone shrinks both alike.
  const double scale_s = std::norm(a + d.r) + 4.0 * eta * sn * sn;
  const double scale_t = std::norm(a - d.r) + 4.0 * sn * sn;
  if (std::abs(d.s) <= kDegeneracyTolerance * scale_s ||
      std::abs(d.t) <= kDegeneracyTolerance * scale_t) {
    throw DegenerateDecomposition("triangularization is singular at eta=" + std::to_string(eta) +
                                  ", theta=" + std::to_string(theta));
  }

  const Complex root_s = std::sqrt(d.s);
  const Complex root_t = std::sqrt(d.t);
  d.u = Matrix2((a + d.r) / root_s, (a - d.r) / root_t, 2.0 * root_eta * sn / root_s,
                -2.0 * sn / root_t);

  d.x = 0.5 * ((1.0 + root_eta) * c - d.r);
  d.z = 0.5 * ((1.0 + root_eta) * c + d.r);
  // y = u0^T (BA) u1. Using r^2 = a^2 - 4 sqrt(eta) sin^2 this reduces to
  //   -(1 - eta) sin^2 [2 (1 + sqrt(eta)) cos + 2 r] / (sqrt(s) sqrt(t)).
  // The prefactor is (1 - eta), not (1 - sqrt(eta)); the latter is short by a
  // factor (1 + sqrt(eta)) and breaks U^T (BA) U = D.
  d.y = -(1.0 - eta) * sn * sn * (2.0 * (1.0 + root_eta) * c + 2.0 * d.r) / (root_s * root_t);

  return d;
}

ChainPower chain_power(const TriangularDecomposition& decomp, int n) {
  if (n < 0) {
    throw std::invalid_argument("chain_power exponent must be >= 0");
  }
  const Complex x = decomp.x;
  const Complex y = decomp.y;
  const Complex z = decomp.z;

  ChainPower p;
  p.n = n;
  if (n == 0) {
    return p;
  }
  if (n == 1) {
    p.X = x;
    p.Y = y;
    p.Z = z;
    return p;
  }

  p.X = ipow(x, n);
  p.Z = ipow(z, n);

  // (x^m - z^m) / (x - z) with m = n - 2
  const int m = n - 2;
  Complex quotient;
  if (std::abs(x - z) < kDegeneracyTolerance) {
    // Limit m * xi^{m-1}; evaluating at the midpoint keeps the error O(|x - z|^2).
    quotient = m == 0 ? Complex(0.0) : static_cast<double>(m) * ipow(0.5 * (x + z), m - 1);
  } else {
    quotient = (ipow(x, m) - ipow(z, m)) / (x - z);
  }
  p.Y = y * (ipow(x, n - 1) + ipow(z, n - 1)) + x * y * z * quotient;
  return p;
}

ClosedFormResult closed_form_success_probability(const InterferometerConfig& config) {
  TriangularDecomposition decomp;
  try {
    decomp = triangularize(config.eta(), config.theta());
  } catch (const DegenerateDecomposition&) {
    return {exact_success_probability_product(config), true};
  }

  const ChainPower power = chain_power(decomp, config.n_splitters() - 1);
  const Matrix2 chain = decomp.u * power.matrix() * decomp.u.transpose();
  const Vector2 out = chain * (beam_splitter_matrix(config.theta()) * Vector2{0.0, 1.0});
  return {checked_probability(std::norm(out[1])), false};
}

double asymptotic_slope(double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1) for the asymptotic formula");
  }
  const double root_eta = std::sqrt(eta);
  return std::numbers::pi * std::numbers::pi / 4.0 * (1.0 + root_eta) / (1.0 - root_eta);
}

double approx_success_probability(int n, double eta) {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  const double p = expanded_success_probability(n, eta);
  return p < 0.0 ? 0.0 : p;
}

}  // namespace ifm
