#pragma once

#include <cstdint>
#include <vector>

#include "tvpoint/types.hpp"

namespace tvpoint {

/**
 * Random number generation.
 *
 * Every random stream in the library is a std::mt19937_64 seeded with a
 * 64-bit value derived through SplitMix64 (derive_seed). Uniform variates in
 * [0, 1) take the top 53 bits of one engine output; Poisson variates use
 * std::poisson_distribution. Results are reproducible bit-for-bit for a given
 * build, and statistically across toolchains.
 */
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for stream `stream` of the generator family rooted at `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seed for a stream indexed by two coordinates (e.g. grid cell, replicate).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

struct SimulationConfig {
  StepFunction intensity = StepFunction::constant(0.0);
  std::int64_t replicates = 1;
  std::uint64_t seed = 0;

  /// Throws ConfigError on negative levels or replicates < 1.
  void validate() const;
};

/// Sorted event times of each replicate separately (replicate i uses stream i).
std::vector<std::vector<double>> sample_replicates(const SimulationConfig& cfg);

/// All replicates pooled into one series with replicate count n.
EventSeries sample_events(const SimulationConfig& cfg);

/// Bundled benchmark intensities: id 1 has 5 change-points, id 2 has 15.
StepFunction example_intensity(int id);

}  // namespace tvpoint
