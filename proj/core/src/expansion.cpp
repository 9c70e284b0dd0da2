#include "ifm/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ifm/closed_form.hpp"

namespace ifm {
namespace {

void require_expansion_domain(int n, double eta) {
  if (n < 4) {
    throw std::invalid_argument("expansion needs n >= 4");
  }
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw std::invalid_argument("expansion needs eta in [0, 1)");
  }
}

}  // namespace

ExpansionRecord expanded_components(int n, double eta) {
  require_expansion_domain(n, eta);

  constexpr double pi = std::numbers::pi;
  constexpr double pi2 = pi * pi;
  const double nn = static_cast<double>(n);
  const double re = std::sqrt(eta);
  const double gap = 1.0 - re;

  const double half_angle = pi / (2.0 * nn);          // pi / 2N
  const double q2 = pi2 / (8.0 * nn * nn);            // pi^2 / 8N^2
  const double c2 = pi2 / (24.0 * nn * nn);           // pi^2 / 24N^2
  const double lead = half_angle * re / gap;
  const double shift = (1.0 - eta) / (gap * gap);     // == (1 + re) / (1 - re)

  ExpansionRecord e;
  e.n = n;
  e.eta = eta;

  e.cos_theta = 1.0 - q2;
  e.sin_theta = half_angle * (1.0 - c2);

  e.u00 = 1.0 - q2 * eta / (gap * gap);
  e.u01 = lead * (1.0 + c2 * (2.0 + 2.0 * re - eta) / (gap * gap));
  e.u10 = lead * (1.0 + c2 * (2.0 - 3.0 * eta + eta * re) / (gap * gap * gap));
  e.u11 = -1.0 + q2 * eta / (gap * gap);

  e.x = re * (1.0 + q2 * shift);
  e.y = -half_angle * (1.0 + re) * (1.0 - c2);
  e.z = 1.0 - q2 * shift;

  const double first = pi2 / (8.0 * nn);
  const double root_eta_pow = std::pow(re, n - 1);
  e.big_x = root_eta_pow * (1.0 + first * shift);
  e.big_z = 1.0 - first * shift;
  e.big_y = -half_angle * (1.0 + re) * (1.0 - root_eta_pow) / gap *
            (1.0 - first * (1.0 + re) / gap);
  return e;
}

double expanded_success_probability(int n, double eta) {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  return 1.0 - asymptotic_slope(eta) / n;
}

}  // namespace ifm
