#include "ifm/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ifm {
namespace {

struct Counts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t absorbed = 0;

  Counts& operator+=(const Counts& o) {
    a += o.a;
    b += o.b;
    absorbed += o.absorbed;
    return *this;
  }
};

Counts run_chunk(const InterferometerConfig& config, std::uint64_t trials, std::uint64_t seed) {
  TrajectoryRng rng(seed);
  Counts counts;
  for (std::uint64_t i = 0; i < trials; ++i) {
    switch (simulate_trajectory(config, rng).tag) {
      case Outcome::DetectedA:
        ++counts.a;
        break;
      case Outcome::DetectedB:
        ++counts.b;
        break;
      case Outcome::Absorbed:
        ++counts.absorbed;
        break;
    }
  }
  return counts;
}

Estimate frequency(std::uint64_t count, std::uint64_t trials) {
  const double p = static_cast<double>(count) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

}  // namespace

const char* to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::DetectedA:
      return "DetectedA";
    case Outcome::DetectedB:
      return "DetectedB";
    case Outcome::Absorbed:
      return "Absorbed";
  }
  return "?";
}

double uniform01(TrajectoryRng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

TrajectoryOutcome simulate_trajectory(const InterferometerConfig& config, TrajectoryRng& rng) {
  const double c = std::cos(config.theta());
  const double s = std::sin(config.theta());
  const double root_eta = std::sqrt(config.eta());
  const double loss = 1.0 - config.eta();

  // B applied to the lower-left input |1>. Amplitudes stay real.
  double a = s;
  double b = c;
  for (int k = 1; k < config.n_splitters(); ++k) {
    const double p_jump = loss * a * a;
    if (uniform01(rng) < p_jump) {
      return {Outcome::Absorbed, k};
    }
    const double keep = 1.0 / std::sqrt(1.0 - p_jump);
    a *= root_eta * keep;
    b *= keep;
    const double a_next = c * a + s * b;
    b = -s * a + c * b;
    a = a_next;
  }
  const double norm = a * a + b * b;
  return {uniform01(rng) * norm < b * b ? Outcome::DetectedB : Outcome::DetectedA, std::nullopt};
}

EstimateReport estimate_probabilities(const InterferometerConfig& config, std::uint64_t trials,
                                      std::uint64_t seed, unsigned workers) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<Counts> per_chunk(chunks);

  auto chunk_size = [&](std::uint64_t i) {
    return std::min(kTrialsPerChunk, trials - i * kTrialsPerChunk);
  };

  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  if (workers <= 1) {
    for (std::uint64_t i = 0; i < chunks; ++i) {
      per_chunk[i] = run_chunk(config, chunk_size(i), chunk_seed(seed, i));
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t i = next++; i < chunks; i = next++) {
          per_chunk[i] = run_chunk(config, chunk_size(i), chunk_seed(seed, i));
        }
      });
    }
  }

  Counts total;
  for (const Counts& c : per_chunk) {
    total += c;
  }

  EstimateReport report;
  report.count_a = total.a;
  report.count_b = total.b;
  report.count_absorbed = total.absorbed;
  report.trials = trials;
  report.seed = seed;
  report.p_detect_a = frequency(total.a, trials);
  report.p_detect_b = frequency(total.b, trials);
  report.p_absorbed = frequency(total.absorbed, trials);
  return report;
}

}  // namespace ifm
