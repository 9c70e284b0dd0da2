#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ifm/interferometer.hpp"

namespace ifm {

enum class Outcome { DetectedA, DetectedB, Absorbed };

const char* to_string(Outcome outcome) noexcept;

struct TrajectoryOutcome {
  Outcome tag = Outcome::DetectedB;
  /// Absorber index in 1..N-1; set iff tag == Absorbed.
  std::optional<int> absorbed_at;
};

/// The generator driving every trajectory. Its output sequence is fixed by
/// the C++ standard, so reports reproduce bit-exactly across platforms.
using TrajectoryRng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(TrajectoryRng& rng) noexcept;

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for chunk `index` of a run with master seed `master`.
std::uint64_t chunk_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Trials per independently seeded chunk. Part of the reproducibility
/// contract: changing it changes every report.
inline constexpr std::uint64_t kTrialsPerChunk = 4096;

/// One photon through the chain, unravelled into jumps. At each absorber the
/// photon is absorbed with probability (1 - eta)|amp_a|^2; otherwise the
/// absorber matrix is applied and the state renormalized. The surviving state
/// is measured in the path basis after the last splitter.
///
/// Draws one uniform per absorber reached, plus one for the final
/// measurement.
TrajectoryOutcome simulate_trajectory(const InterferometerConfig& config, TrajectoryRng& rng);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;

  bool operator==(const Estimate&) const = default;
};

struct EstimateReport {
  Estimate p_detect_b;
  Estimate p_detect_a;
  Estimate p_absorbed;
  std::uint64_t count_b = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_absorbed = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const EstimateReport&) const = default;
};

/// Frequencies over `trials` independent trajectories. The result depends
/// only on (config, trials, seed); `workers` (0 = hardware concurrency) only
/// changes how chunks are distributed over threads.
EstimateReport estimate_probabilities(const InterferometerConfig& config, std::uint64_t trials,
                                      std::uint64_t seed, unsigned workers = 0);

}  // namespace ifm
