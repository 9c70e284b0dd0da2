#pragma once

namespace ifm {

/// Truncated large-N series for the pieces of the closed-form pipeline at
/// theta = pi/(2N), as functions of N with eta held fixed.
///
/// Remainder orders: cos_theta, u00, u11, x, z are O(1/N^4); sin_theta, u01,
/// u10, y are O(1/N^5); big_x (relative to sqrt(eta)^{N-1}) and big_z are
/// O(1/N^2); big_y is O(1/N^3). big_y assumes sqrt(eta)^N << 1/N.
struct ExpansionRecord {
  int n = 0;
  double eta = 0.0;

  double cos_theta = 0.0;
  double sin_theta = 0.0;

  double u00 = 0.0;
  double u01 = 0.0;
  double u10 = 0.0;
  double u11 = 0.0;

  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  // Entries of D^{N-1}.
  double big_x = 0.0;
  double big_y = 0.0;
  double big_z = 0.0;
};

/// Throws std::invalid_argument unless n >= 4 and 0 <= eta < 1.
ExpansionRecord expanded_components(int n, double eta);

/// First-order success probability 1 - (pi^2/4)(1 + sqrt(eta))/(1 - sqrt(eta))/N
/// without the clamp applied by approx_success_probability.
double expanded_success_probability(int n, double eta);

}  // namespace ifm
