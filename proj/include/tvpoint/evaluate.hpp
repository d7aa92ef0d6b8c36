#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tvpoint/types.hpp"
#include "tvpoint/weights.hpp"

namespace tvpoint {

/// Exact integral of (estimate - truth)^2 over [0, 1].
double mise(const StepFunction& estimate, const StepFunction& truth);

/// Least-squares contrast  int estimate^2 - (2/n) sum_t estimate(t).
double empirical_risk(const StepFunction& estimate, const EventSeries& events);

/**
 * sup_{b in b_set} min_{a in a_set} |a - b|.
 *
 * 0 when b_set is empty, +infinity when a_set is empty and b_set is not.
 */
double hausdorff_one_sided(std::span<const double> a_set, std::span<const double> b_set);

enum class WeightMode { data_driven, uniform };

struct CvConfig {
  int folds = 10;
  std::vector<double> scale_grid;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Geometric grid 2^k for k = -12..4, the default candidate multipliers.
std::vector<double> default_scale_grid();

struct CvPoint {
  double scale;
  double risk;
};

struct CvResult {
  double best_scale = 0.0;
  std::vector<CvPoint> curve;   // ascending scale
  double max_kkt_residual = 0.0;  // over every fold fit
};

/**
 * K-fold cross-validation of the weight multiplier.
 *
 * Each event draws a fold label uniformly in 0..K-1. For fold k the estimator
 * is fitted on the remaining events (replicate count unchanged, data-driven
 * weights recomputed from them), its levels are multiplied by K/(K-1), and it
 * is scored on the held-out events by
 *   int lambda^2 - (2K/n) sum_{t in fold k} lambda(t).
 * The multiplier minimising the summed risk wins; ties go to the smaller one.
 *
 * Throws InputError when there are fewer events than folds and ConfigError on
 * an invalid configuration.
 */
CvResult cross_validate_scale(const EventSeries& events, std::size_t m, const CvConfig& cfg,
                              WeightMode mode, const WeightConfig& wcfg);

/// Base weights of the given mode at unit scale (wcfg.scale is ignored).
WeightVector base_weights(std::span<const std::int64_t> counts, std::int64_t replicates,
                          WeightMode mode, const WeightConfig& wcfg);

}  // namespace tvpoint
