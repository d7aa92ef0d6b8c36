#include "tvpoint/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "tvpoint/error.hpp"
#include "tvpoint/grid.hpp"
#include "tvpoint/tvprox.hpp"

namespace tvpoint {

BinnedSignal scale_counts(std::span<const std::int64_t> counts, std::int64_t replicates) {
  if (counts.empty()) throw DimensionError("bin count m must be >= 1");
  if (replicates < 1) throw InputError("replicate count n must be >= 1");
  const double factor =
      std::sqrt(static_cast<double>(counts.size())) / static_cast<double>(replicates);
  std::vector<double> values(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    values[j] = factor * static_cast<double>(counts[j]);
  }
  return BinnedSignal(std::move(values));
}

BinnedSignal bin_counts(const EventSeries& events, std::size_t m) {
  return scale_counts(grid_counts(events, m), events.replicates());
}

std::size_t default_bins(std::int64_t replicates) {
  if (replicates < 1) throw InputError("replicate count n must be >= 1");
  auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(replicates))));
  // Guard against sqrt rounding for perfect squares.
  while (m > 1 && (m - 1) * (m - 1) >= static_cast<std::size_t>(replicates)) --m;
  while (m * m < static_cast<std::size_t>(replicates)) ++m;
  return std::max<std::size_t>(m, 1);
}

StepFunction intensity_from_beta(std::span<const double> beta, std::size_t m, double tolerance) {
  if (beta.size() != m || m == 0) throw DimensionError("beta length must equal m >= 1");
  const double root_m = std::sqrt(static_cast<double>(m));
  std::vector<double> breakpoints{0.0};
  std::vector<double> levels;
  std::size_t start = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    if (j < m && std::abs(beta[j] - beta[j - 1]) <= tolerance) continue;
    double sum = 0.0;
    bool flat = true;
    for (std::size_t q = start; q < j; ++q) {
      sum += beta[q];
      flat = flat && beta[q] == beta[start];
    }
    levels.push_back(root_m * (flat ? beta[start] : sum / static_cast<double>(j - start)));
    breakpoints.push_back(j < m ? grid_edge(j - 1, m) : 1.0);
    start = j;
  }
  return StepFunction(std::move(breakpoints), std::move(levels));
}

FitResult fit_binned(const BinnedSignal& signal, const WeightVector& weights) {
  auto sol = prox_weighted_tv(signal, weights);
  const std::size_t m = signal.size();

  FitResult r;
  r.beta_prox = sol.beta;
  r.kkt_residual = sol.kkt_residual;
  r.beta = std::move(sol.beta);
  for (double& b : r.beta) {
    if (b < 0.0) {
      b = 0.0;
      r.clamped = true;
    }
  }
  r.jump_tolerance = 1e-9 * std::max(1.0, signal.max_abs());
  const double md = static_cast<double>(m);
  for (std::size_t j = 1; j < m; ++j) {
    if (std::abs(r.beta[j] - r.beta[j - 1]) > r.jump_tolerance) {
      r.jump_set.push_back(j + 1);
      r.tau_hat.push_back(static_cast<double>(j + 1) / md);
      r.tau_boundary.push_back(static_cast<double>(j) / md);
    }
  }
  r.l_hat = r.jump_set.size();
  r.intensity = intensity_from_beta(r.beta, m, r.jump_tolerance);
  return r;
}

FitResult fit(const EventSeries& events, std::size_t m, const WeightVector& weights) {
  if (weights.size() != m) throw DimensionError("weight vector length must equal m");
  return fit_binned(bin_counts(events, m), weights);
}

}  // namespace tvpoint
