#pragma once

#include <functional>
#include <optional>

namespace ifm {

/// Find the fewest splitters (theta tied to pi/(2N)) that reach target_p
/// against an absorber of leakage eta.
struct DesignQuery {
  double eta = 0.0;
  double target_p = 0.9;
  int n_max = 1'000'000;

  /// Throws std::invalid_argument unless eta in [0, 1), target_p in (0, 1)
  /// and n_max >= 1.
  void validate() const;
};

struct MinSplitters {
  int n = 0;
  /// Product-evaluator P(n) and P(n - 1); the latter is empty when n == 1.
  double p_at_n = 0.0;
  std::optional<double> p_at_n_minus_1;
  /// Starting point taken from the first-order formula.
  int seed_guess = 0;
};

/// ceil((pi^2/4)(1 + sqrt(eta))/(1 - sqrt(eta)) / (1 - target_p)), at least 1.
int seed_splitter_count(double eta, double target_p);

/// Least N <= n_max with P(N, eta) >= target_p, exact with respect to the
/// product evaluator. Throws NotReachable carrying the best P seen.
MinSplitters min_beam_splitters(const DesignQuery& query);

/// Largest x in [0, 1] (to 1e-12) with curve(x) >= target, for a curve that
/// must be strictly decreasing on [0, 1]. Monotonicity is checked on 101
/// evenly spaced samples first.
///
/// Throws NoSolution if curve(0) < target and NonMonotoneBracket if the
/// samples are not strictly decreasing.
double bisect_decreasing(const std::function<double(double)>& curve, double target);

/// Largest eta (to 1e-9) with P(n, eta) >= target_p, by bisection on
/// [0, 1] after checking that P is strictly decreasing there.
///
/// Throws NoSolution if P(n, 0) < target_p and NonMonotoneBracket if the
/// sampled curve is not decreasing.
double max_tolerable_eta(int n, double target_p);

}  // namespace ifm
