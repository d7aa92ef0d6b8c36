#include "tvpoint/studies.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "tvpoint/error.hpp"
#include "tvpoint/estimator.hpp"
#include "tvpoint/grid.hpp"
#include "tvpoint/simulate.hpp"
#include "tvpoint/tvprox.hpp"

namespace tvpoint {

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TVPOINT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

const char* mode_name(WeightMode mode) {
  return mode == WeightMode::uniform ? "unweighted" : "weighted";
}

void StudyConfig::validate() const {
  example_intensity(example);
  if (n_grid.empty()) throw ConfigError("n grid is empty");
  for (auto n : n_grid) {
    if (n < 1) throw ConfigError("every n in the grid must be >= 1");
  }
  if (replicates < 1) throw ConfigError("Monte-Carlo replicate count must be >= 1");
  if (bins && *bins == 0) throw ConfigError("bin count must be >= 1");
  weights.validate();
  if (fixed_scale) {
    if (!(std::isfinite(*fixed_scale) && *fixed_scale > 0.0)) {
      throw ConfigError("weight scale must be > 0");
    }
  } else {
    CvConfig{folds, scale_grid, 0}.validate();
  }
}

std::size_t StudyConfig::bins_for(std::int64_t n) const { return bins ? *bins : default_bins(n); }

namespace {

struct ReplicateFit {
  FitResult fit;
  double suffix_violation = 0.0;
  double max_kkt = 0.0;
};

ReplicateFit run_replicate(const StudyConfig& cfg, const StepFunction& truth, std::int64_t n,
                           std::size_t rep) {
  const std::uint64_t base = derive_seed(cfg.seed, static_cast<std::uint64_t>(n), rep);
  const EventSeries events = sample_events({truth, n, derive_seed(base, 0)});
  const std::size_t m = cfg.bins_for(n);

  double scale = cfg.fixed_scale.value_or(1.0);
  double cv_kkt = 0.0;
  if (!cfg.fixed_scale && events.size() >= static_cast<std::size_t>(cfg.folds)) {
    const auto cv = cross_validate_scale(events, m, {cfg.folds, cfg.scale_grid, derive_seed(base, 1)},
                                         cfg.mode, cfg.weights);
    scale = cv.best_scale;
    cv_kkt = cv.max_kkt_residual;
  }
  const auto counts = grid_counts(events, m);
  const BinnedSignal signal = scale_counts(counts, n);
  const WeightVector w = base_weights(counts, n, cfg.mode, cfg.weights).scaled(scale);

  ReplicateFit out{fit_binned(signal, w), 0.0, 0.0};
  out.suffix_violation = suffix_sum_violation(signal, w, out.fit.beta_prox);
  out.max_kkt = std::max(cv_kkt, out.fit.kkt_residual);
  return out;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double mu = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

std::vector<MiseRow> run_mise_study(const StudyConfig& cfg) {
  cfg.validate();
  const StepFunction truth = example_intensity(cfg.example);
  const std::size_t reps = static_cast<std::size_t>(cfg.replicates);
  std::vector<MiseRow> rows;
  for (std::int64_t n : cfg.n_grid) {
    MiseRow row;
    row.n = n;
    row.mode = cfg.mode;
    row.m = cfg.bins_for(n);
    row.per_replicate.assign(reps, 0.0);
    std::vector<double> kkt(reps, 0.0), suffix(reps, 0.0);
    parallel_for(reps, [&](std::size_t r) {
      const auto rf = run_replicate(cfg, truth, n, r);
      row.per_replicate[r] = mise(rf.fit.intensity, truth);
      kkt[r] = rf.max_kkt;
      suffix[r] = rf.suffix_violation;
    });
    row.mean_mise = mean(row.per_replicate);
    row.sd_mise = sample_sd(row.per_replicate);
    row.max_kkt_residual = *std::max_element(kkt.begin(), kkt.end());
    row.max_suffix_violation = *std::max_element(suffix.begin(), suffix.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ConsistencyRow> run_consistency_study(const StudyConfig& cfg) {
  cfg.validate();
  const StepFunction truth = example_intensity(cfg.example);
  const std::vector<double> true_cps = truth.change_point_locations();
  const std::size_t reps = static_cast<std::size_t>(cfg.replicates);
  std::vector<ConsistencyRow> rows;
  for (std::int64_t n : cfg.n_grid) {
    ConsistencyRow row;
    row.n = n;
    row.m = cfg.bins_for(n);
    const double two_bins = 2.0 / static_cast<double>(row.m);
    row.per_replicate_coverage.assign(reps, 0.0);
    std::vector<double> max_err(reps, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> kkt(reps, 0.0), suffix(reps, 0.0);
    parallel_for(reps, [&](std::size_t r) {
      const auto rf = run_replicate(cfg, truth, n, r);
      const auto& tau = rf.fit.tau_hat;
      row.per_replicate_coverage[r] = hausdorff_one_sided(tau, true_cps);
      if (tau.size() == true_cps.size()) {
        double e = 0.0;
        for (std::size_t l = 0; l < tau.size(); ++l) e = std::max(e, std::abs(true_cps[l] - tau[l]));
        max_err[r] = e;
      }
      kkt[r] = rf.max_kkt;
      suffix[r] = rf.suffix_violation;
    });
    std::vector<double> correct;
    for (double e : max_err) {
      if (!std::isnan(e)) correct.push_back(e);
    }
    row.frac_correct_l = static_cast<double>(correct.size()) / static_cast<double>(reps);
    row.mean_max_err_given_correct_l =
        correct.empty() ? std::numeric_limits<double>::quiet_NaN() : mean(correct);
    row.mean_coverage = mean(row.per_replicate_coverage);
    row.frac_coverage_within_two_bins =
        static_cast<double>(std::count_if(row.per_replicate_coverage.begin(),
                                          row.per_replicate_coverage.end(),
                                          [&](double e) { return e <= two_bins; })) /
        static_cast<double>(reps);
    row.max_kkt_residual = *std::max_element(kkt.begin(), kkt.end());
    row.max_suffix_violation = *std::max_element(suffix.begin(), suffix.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tvpoint
