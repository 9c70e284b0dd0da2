#pragma once

#include <optional>

#include "ifm/matrix2.hpp"

namespace ifm {

/// One chained interferometer: N beam splitters of angle theta with an
/// absorber of leakage eta on every upper path between them.
///
/// eta is the probability that the photon passes the object unabsorbed,
/// so eta = 0 is a perfect absorber and eta = 1 a transparent one. theta
/// defaults to pi/(2N), the tuning that routes an unobstructed photon
/// fully into the upper output port.
class InterferometerConfig {
 public:
  /// Throws std::invalid_argument unless n >= 1, eta in [0, 1] and
  /// theta in (0, pi/2].
  InterferometerConfig(int n_splitters, double eta, std::optional<double> theta = std::nullopt);

  int n_splitters() const noexcept { return n_splitters_; }
  double eta() const noexcept { return eta_; }
  double theta() const noexcept { return theta_; }

 private:
  int n_splitters_;
  double eta_;
  double theta_;
};

/// Throw std::invalid_argument for theta outside (0, pi/2] / eta outside [0, 1].
void validate_theta(double theta);
void validate_eta(double eta);

/// pi / (2n)
double tuned_theta(int n_splitters);

/// Photon amplitudes on |0> = |1>_a|0>_b (upper path) and |1> = |0>_a|1>_b
/// (lower path), plus the probability weight already lost to absorption.
/// The absorbed branch is orthogonal and never interferes again, so a scalar
/// carries everything observable about it.
struct PhotonState {
  Complex amp_a{0.0};
  Complex amp_b{1.0};
  double p_absorbed = 0.0;

  /// Photon injected into the lower-left port.
  static PhotonState lower_left_input() { return {}; }

  /// |amp_a|^2 + |amp_b|^2 + p_absorbed - 1
  double norm_defect() const noexcept;
};

/// [[cos, sin], [-sin, cos]]; throws std::invalid_argument unless theta is
/// in (0, pi/2].
Matrix2 beam_splitter_matrix(double theta);

/// diag(sqrt(eta), 1); throws std::invalid_argument unless eta is in [0, 1].
Matrix2 absorber_matrix(double eta);

/// State after k splitters with no object present: (sin k.theta, cos k.theta).
PhotonState propagate_no_object(int k, double theta);

/// Applies B, then (A, B) repeated N-1 times. Each absorber moves
/// (1 - eta)|amp_a|^2 of weight into p_absorbed.
PhotonState evolve_state(const PhotonState& state, const InterferometerConfig& config);

/// |<1|(BA)^{N-1} B|1>|^2 by direct propagation.
double exact_success_probability_product(const InterferometerConfig& config);

/// cos^{2N}(theta): the success probability with a perfect absorber.
double perfect_absorber_probability(int n_splitters, double theta);

/// Values within 1e-12 of [0, 1] are clamped into it; anything further out
/// throws ProbabilityOutOfRange.
double checked_probability(double p);

inline constexpr double kProbabilityRoundoff = 1e-12;

}  // namespace ifm
