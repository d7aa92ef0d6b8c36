#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tvpoint/types.hpp"

namespace tvpoint {

/**
 * Outcome of a weighted-TV intensity fit on an m-bin grid.
 *
 * Indices in jump_set are 1-based bin numbers j in 2..m: the first bin of a
 * new plateau. tau_hat[l] = j_l / m and tau_boundary[l] = (j_l - 1) / m, the
 * grid edge where the level actually changes.
 */
struct FitResult {
  std::vector<double> beta;      // clamped to >= 0
  std::vector<double> beta_prox; // unconstrained prox output
  std::vector<std::size_t> jump_set;
  std::vector<double> tau_hat;
  std::vector<double> tau_boundary;
  std::size_t l_hat = 0;
  StepFunction intensity = StepFunction::constant(0.0);
  double kkt_residual = 0.0;
  double jump_tolerance = 0.0;
  bool clamped = false;
};

/// sqrt(m)/n times the number of events per bin ((j-1)/m, j/m].
BinnedSignal bin_counts(const EventSeries& events, std::size_t m);

/// Same scaling applied to precomputed per-bin counts.
BinnedSignal scale_counts(std::span<const std::int64_t> counts, std::int64_t replicates);

/// Default resolution ceil(sqrt(n)), at least 1.
std::size_t default_bins(std::int64_t replicates);

FitResult fit(const EventSeries& events, std::size_t m, const WeightVector& weights);

/// Fit directly from a binned signal (the grid resolution is signal.size()).
FitResult fit_binned(const BinnedSignal& signal, const WeightVector& weights);

/**
 * Step function with level sqrt(m) * beta[j] on bin j. Adjacent bins whose levels differ
 * by at most `tolerance` are merged into one segment carrying
 * the run mean; tolerance 0 merges exactly equal levels only.
 */
StepFunction intensity_from_beta(std::span<const double> beta, std::size_t m,
                                 double tolerance = 0.0);

}  // namespace tvpoint
