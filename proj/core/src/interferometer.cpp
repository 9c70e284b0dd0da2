#include "ifm/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ifm/errors.hpp"

namespace ifm {

void validate_theta(double theta) {
  if (!(theta > 0.0 && theta <= std::numbers::pi / 2)) {
    throw std::invalid_argument("theta must lie in (0, pi/2], got " + std::to_string(theta));
  }
}

void validate_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1], got " + std::to_string(eta));
  }
}

double tuned_theta(int n_splitters) {
  if (n_splitters < 1) {
    throw std::invalid_argument("n_splitters must be >= 1");
  }
  return std::numbers::pi / (2.0 * n_splitters);
}

InterferometerConfig::InterferometerConfig(int n_splitters, double eta,
                                           std::optional<double> theta)
    : n_splitters_(n_splitters), eta_(eta), theta_(0.0) {
  if (n_splitters < 1) {
    throw std::invalid_argument("n_splitters must be >= 1, got " + std::to_string(n_splitters));
  }
  validate_eta(eta);
  theta_ = theta.value_or(tuned_theta(n_splitters));
  validate_theta(theta_);
}

double PhotonState::norm_defect() const noexcept {
  return std::norm(amp_a) + std::norm(amp_b) + p_absorbed - 1.0;
}

Matrix2 beam_splitter_matrix(double theta) {
  validate_theta(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, s, -s, c};
}

Matrix2 absorber_matrix(double eta) {
  validate_eta(eta);
  return {std::sqrt(eta), 0.0, 0.0, 1.0};
}

PhotonState propagate_no_object(int k, double theta) {
  if (k < 0) {
    throw std::invalid_argument("splitter count k must be >= 0");
  }
  validate_theta(theta);
  const Matrix2 b = beam_splitter_matrix(theta);
  Vector2 v{0.0, 1.0};
  for (int i = 0; i < k; ++i) {
    v = b * v;
  }
  return {v[0], v[1], 0.0};
}

PhotonState evolve_state(const PhotonState& state, const InterferometerConfig& config) {
  const Matrix2 b = beam_splitter_matrix(config.theta());
  const Matrix2 a = absorber_matrix(config.eta());
  const double loss = 1.0 - config.eta();

  Vector2 v = b * Vector2{state.amp_a, state.amp_b};
  double absorbed = state.p_absorbed;
  for (int i = 1; i < config.n_splitters(); ++i) {
    absorbed += loss * std::norm(v[0]);
    v = b * (a * v);
  }
  return {v[0], v[1], absorbed};
}

double exact_success_probability_product(const InterferometerConfig& config) {
  const PhotonState out = evolve_state(PhotonState::lower_left_input(), config);
  return checked_probability(std::norm(out.amp_b));
}

double perfect_absorber_probability(int n_splitters, double theta) {
  if (n_splitters < 1) {
    throw std::invalid_argument("n_splitters must be >= 1");
  }
  return checked_probability(std::pow(std::cos(theta), 2 * n_splitters));
}

double checked_probability(double p) {
  if (!(p >= -kProbabilityRoundoff && p <= 1.0 + kProbabilityRoundoff)) {
    throw ProbabilityOutOfRange("probability " + std::to_string(p) + " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace ifm
