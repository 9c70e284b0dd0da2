#include "ifm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ifm/closed_form.hpp"
#include "ifm/errors.hpp"
#include "ifm/interferometer.hpp"

namespace ifm {
namespace {

double product_p(int n, double eta) {
  return exact_success_probability_product(InterferometerConfig(n, eta));
}

double fast_p(int n, double eta) {
  return closed_form_success_probability(InterferometerConfig(n, eta)).probability;
}

constexpr int kMonotoneSamples = 101;
constexpr double kBisectionWidth = 1e-12;

}  // namespace

void DesignQuery::validate() const {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1)");
  }
  if (!(target_p > 0.0 && target_p < 1.0)) {
    throw std::invalid_argument("target must lie in (0, 1)");
  }
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be >= 1");
  }
}

int seed_splitter_count(double eta, double target_p) {
  const double guess = std::ceil(asymptotic_slope(eta) / (1.0 - target_p));
  return guess < 1.0 ? 1 : guess > 2.0e9 ? 2'000'000'000 : static_cast<int>(guess);
}

MinSplitters min_beam_splitters(const DesignQuery& query) {
  query.validate();
  const double eta = query.eta;
  const double target = query.target_p;

  MinSplitters result;
  result.seed_guess = seed_splitter_count(eta, target);

  int best_n = 0;
  double best_p = -1.0;
  auto track = [&](int n, double p) {
    if (p > best_p) {
      best_p = p;
      best_n = n;
    }
    return p;
  };
  auto not_reachable = [&] {
    return NotReachable("no N <= " + std::to_string(query.n_max) + " reaches P >= " +
                            std::to_string(target) + " at eta=" + std::to_string(eta),
                        best_n, best_p);
  };

  // Scan with the O(log N) closed form from the first-order seed.
  int n = std::min(result.seed_guess, query.n_max);
  if (track(n, fast_p(n, eta)) >= target) {
    while (n > 1 && track(n - 1, fast_p(n - 1, eta)) >= target) {
      --n;
    }
  } else {
    while (n < query.n_max && track(n + 1, fast_p(n + 1, eta)) < target) {
      ++n;
    }
    if (n == query.n_max) {
      throw not_reachable();
    }
    ++n;
  }

  // Certify (n, n - 1) with the product evaluator; the closed form agrees to
  // ~1e-10, so this only moves n when P sits within round-off of the target.
  for (;;) {
    const double p_n = track(n, product_p(n, eta));
    if (p_n < target) {
      if (n == query.n_max) {
        throw not_reachable();
      }
      ++n;
      continue;
    }
    if (n > 1) {
      const double p_prev = product_p(n - 1, eta);
      if (p_prev >= target) {
        --n;
        continue;
      }
      result.p_at_n_minus_1 = p_prev;
    }
    result.n = n;
    result.p_at_n = p_n;
    return result;
  }
}

double bisect_decreasing(const std::function<double(double)>& curve, double target) {
  const double at_zero = curve(0.0);
  if (at_zero < target) {
    throw NoSolution("curve starts at " + std::to_string(at_zero) + ", below the target " +
                     std::to_string(target));
  }

  double previous = at_zero;
  for (int i = 1; i < kMonotoneSamples; ++i) {
    const double x = static_cast<double>(i) / (kMonotoneSamples - 1);
    const double value = curve(x);
    if (!(value < previous)) {
      throw NonMonotoneBracket("curve is not strictly decreasing near " + std::to_string(x));
    }
    previous = value;
  }

  double lo = 0.0;  // curve(lo) >= target
  double hi = 1.0;
  if (curve(hi) >= target) {
    return hi;
  }
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (curve(mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double max_tolerable_eta(int n, double target_p) {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  if (!(target_p > 0.0 && target_p < 1.0)) {
    throw std::invalid_argument("target must lie in (0, 1)");
  }
  try {
    return bisect_decreasing([n](double eta) { return product_p(n, eta); }, target_p);
  } catch (const NoSolution&) {
    throw NoSolution("P(" + std::to_string(n) + ", 0) = " + std::to_string(product_p(n, 0.0)) +
                     " is already below the target " + std::to_string(target_p));
  }
}

}  // namespace ifm
