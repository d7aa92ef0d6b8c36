#include "tvpoint/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tvpoint/error.hpp"
#include "tvpoint/estimator.hpp"
#include "tvpoint/grid.hpp"

namespace tvpoint {

double mise(const StepFunction& estimate, const StepFunction& truth) {
  const auto ea = estimate.breakpoints();
  const auto tb = truth.breakpoints();
  // Merge-walk the two partitions; every refined piece has constant levels.
  std::size_t i = 0, j = 0;
  double left = 0.0, total = 0.0;
  while (i + 1 < ea.size() && j + 1 < tb.size()) {
    const double right = std::min(ea[i + 1], tb[j + 1]);
    const double d = estimate.levels()[i] - truth.levels()[j];
    total += d * d * (right - left);
    left = right;
    if (ea[i + 1] == right) ++i;
    if (tb[j + 1] == right) ++j;
  }
  return total;
}

double empirical_risk(const StepFunction& estimate, const EventSeries& events) {
  double sum = 0.0;
  for (double t : events.times()) sum += estimate(t);
  return estimate.squared_integral() - 2.0 * sum / static_cast<double>(events.replicates());
}

double hausdorff_one_sided(std::span<const double> a_set, std::span<const double> b_set) {
  if (b_set.empty()) return 0.0;
  if (a_set.empty()) return std::numeric_limits<double>::infinity();
  std::vector<double> a(a_set.begin(), a_set.end());
  std::sort(a.begin(), a.end());
  double worst = 0.0;
  for (double b : b_set) {
    auto it = std::lower_bound(a.begin(), a.end(), b);
    double best = std::numeric_limits<double>::infinity();
    if (it != a.end()) best = *it - b;
    if (it != a.begin()) best = std::min(best, b - *(it - 1));
    worst = std::max(worst, best);
  }
  return worst;
}

void CvConfig::validate() const {
  if (folds < 2) throw ConfigError("cross-validation needs at least 2 folds");
  if (scale_grid.empty()) throw ConfigError("scale grid is empty");
  for (double s : scale_grid) {
    if (!(std::isfinite(s) && s > 0.0)) throw ConfigError("scale grid entries must be > 0");
  }
}

std::vector<double> default_scale_grid() {
  std::vector<double> grid;
  for (int k = -12; k <= 4; ++k) grid.push_back(std::ldexp(1.0, k));
  return grid;
}

WeightVector base_weights(std::span<const std::int64_t> counts, std::int64_t replicates,
                          WeightMode mode, const WeightConfig& wcfg) {
  if (mode == WeightMode::uniform) return uniform_weights(counts.size(), 1.0);
  WeightConfig unit = wcfg;
  unit.scale = 1.0;
  return data_driven_weights_from_counts(counts, replicates, unit);
}

CvResult cross_validate_scale(const EventSeries& events, std::size_t m, const CvConfig& cfg,
                              WeightMode mode, const WeightConfig& wcfg) {
  cfg.validate();
  wcfg.validate();
  if (m == 0) throw DimensionError("bin count m must be >= 1");
  const auto folds = static_cast<std::size_t>(cfg.folds);
  if (events.size() < folds) {
    throw InputError("cross-validation needs at least as many events as folds");
  }

  std::vector<double> grid(cfg.scale_grid);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Labels are drawn up front in event order, so the split depends on the seed only.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> label(0, folds - 1);
  std::vector<std::vector<std::int64_t>> fold_counts(folds, std::vector<std::int64_t>(m, 0));
  std::vector<std::int64_t> total(m, 0);
  for (double t : events.times()) {
    const std::size_t j = grid_bin(t, m);
    ++fold_counts[label(rng)][j];
    ++total[j];
  }

  const double n = static_cast<double>(events.replicates());
  const double kd = static_cast<double>(folds);
  const double correction = kd / (kd - 1.0);
  const double root_m = std::sqrt(static_cast<double>(m));

  CvResult result;
  std::vector<double> risk(grid.size(), 0.0);
  std::vector<std::int64_t> train(m);
  for (std::size_t k = 0; k < folds; ++k) {
    for (std::size_t j = 0; j < m; ++j) train[j] = total[j] - fold_counts[k][j];
    const BinnedSignal signal = scale_counts(train, events.replicates());
    const WeightVector base = base_weights(train, events.replicates(), mode, wcfg);
    for (std::size_t s = 0; s < grid.size(); ++s) {
      const FitResult f = fit_binned(signal, base.scaled(grid[s]));
      result.max_kkt_residual = std::max(result.max_kkt_residual, f.kkt_residual);
      // The corrected estimate is constant on each bin, so both terms reduce to bin sums.
      double sq = 0.0, cross = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        const double level = correction * root_m * f.beta[j];
        sq += level * level;
        cross += level * static_cast<double>(fold_counts[k][j]);
      }
      risk[s] += sq / static_cast<double>(m) - 2.0 * kd * cross / n;
    }
  }

  std::size_t best = 0;
  for (std::size_t s = 0; s < grid.size(); ++s) {
    result.curve.push_back({grid[s], risk[s]});
    if (risk[s] < risk[best]) best = s;
  }
  result.best_scale = grid[best];
  return result;
}

}  // namespace tvpoint
