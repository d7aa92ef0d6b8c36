#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "tvpoint/types.hpp"

namespace tvpoint {

/**
 * Constants of the Bernstein-type deviation bound behind the data-driven
 * weights.
 *
 * confidence:  x > 0, the bound holds with probability 1 - O(e^{-x})
 * epsilon:     peeling ratio, > 0
 * c_h:         iterated-log exponent, > 1
 * c_0:         truncation constant, needs e*c_0 >= 2*(4/3 + epsilon)*c_h
 * scale:       multiplier applied to every weight (tuned by cross-validation)
 */
struct WeightConfig {
  double x = 1.0;
  double epsilon = 1.0;
  double c_h = 2.0;
  double c_0 = 28.0 / (3.0 * std::numbers::e);
  double scale = 1.0;

  /// Throws ConfigError if any constraint fails.
  void validate() const;
};

struct BernsteinConstants {
  double c1;
  double c2;
};

/// (c1, c2) = (4 sqrt(1+eps), 2 sqrt(2 max(c_0, 2(1+eps)(4/3+eps))) + 2/3).
BernsteinConstants bernstein_constants(const WeightConfig& cfg);

/**
 * v_hat[j]: mean number of events per replicate in (j/m, 1] (0-based j).
 * h_hat[j]: iterated-logarithm correction derived from v_hat[j].
 */
struct TailStatistics {
  std::vector<double> v_hat;
  std::vector<double> h_hat;
};

TailStatistics tail_statistics(const EventSeries& events, std::size_t m, const WeightConfig& cfg);

/// Same as above from per-bin event counts pooled over `replicates` copies.
TailStatistics tail_statistics_from_counts(std::span<const std::int64_t> counts,
                                           std::int64_t replicates, const WeightConfig& cfg);

/// Data-driven weights w[j] = scale * (c1 sqrt(m (z + h_j) V_j / n) + c2 sqrt(m) (z + 1 + h_j) / n),
/// z = x + log m, for j >= 1; w[0] = 0.
WeightVector data_driven_weights(const EventSeries& events, std::size_t m, const WeightConfig& cfg);

WeightVector data_driven_weights_from_counts(std::span<const std::int64_t> counts,
                                             std::int64_t replicates, const WeightConfig& cfg);

/// w = [0, scale, ..., scale].
WeightVector uniform_weights(std::size_t m, double scale);

}  // namespace tvpoint
