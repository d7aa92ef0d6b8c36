#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tvpoint/evaluate.hpp"
#include "tvpoint/weights.hpp"

namespace tvpoint {

/// Worker count from TVPOINT_THREADS (0 or unset: hardware concurrency).
unsigned worker_count();

/// Runs body(i) for i in [0, count) on worker_count() threads. Exceptions are
/// rethrown on the caller after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

const char* mode_name(WeightMode mode);

/**
 * Monte-Carlo study configuration shared by the MISE and change-point studies.
 *
 * Each replicate simulates the example intensity with n copies, fits on
 * m = bins or ceil(sqrt(n)) bins, with the weight multiplier either fixed
 * (scale) or selected by cross-validation.
 */
struct StudyConfig {
  int example = 1;
  std::vector<std::int64_t> n_grid;
  int replicates = 20;
  std::uint64_t seed = 0;
  WeightMode mode = WeightMode::data_driven;
  WeightConfig weights;
  int folds = 10;
  std::vector<double> scale_grid = default_scale_grid();
  std::optional<double> fixed_scale;
  std::optional<std::size_t> bins;

  void validate() const;
  std::size_t bins_for(std::int64_t n) const;
};

struct MiseRow {
  std::int64_t n = 0;
  WeightMode mode = WeightMode::data_driven;
  std::size_t m = 0;
  double mean_mise = 0.0;
  double sd_mise = 0.0;  // NaN for a single replicate
  std::vector<double> per_replicate;
  double max_kkt_residual = 0.0;      // over final fits
  double max_suffix_violation = 0.0;  // suffix-sum form, over final fits
};

struct ConsistencyRow {
  std::int64_t n = 0;
  std::size_t m = 0;
  double frac_correct_l = 0.0;
  double mean_max_err_given_correct_l = 0.0;  // NaN if no replicate has the right count
  double mean_coverage = 0.0;                 // mean of E(T_hat || T_0)
  double frac_coverage_within_two_bins = 0.0; // fraction with E(T_hat || T_0) <= 2/m
  std::vector<double> per_replicate_coverage;
  double max_kkt_residual = 0.0;
  double max_suffix_violation = 0.0;
};

std::vector<MiseRow> run_mise_study(const StudyConfig& cfg);
std::vector<ConsistencyRow> run_consistency_study(const StudyConfig& cfg);

}  // namespace tvpoint
