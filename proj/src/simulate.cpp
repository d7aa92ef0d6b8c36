#include "tvpoint/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tvpoint/error.hpp"

namespace tvpoint {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(seed, a), b);
}

void SimulationConfig::validate() const {
  if (replicates < 1) throw ConfigError("replicate count n must be >= 1");
  for (double v : intensity.levels()) {
    if (v < 0.0) throw ConfigError("intensity levels must be >= 0");
  }
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> sample_one(const StepFunction& intensity, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto bp = intensity.breakpoints();
  const auto levels = intensity.levels();
  std::vector<double> times;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const double lo = bp[l], hi = bp[l + 1];
    const double mean = levels[l] * (hi - lo);
    if (mean <= 0.0) continue;
    std::poisson_distribution<std::int64_t> poisson(mean);
    const std::int64_t k = poisson(rng);
    for (std::int64_t i = 0; i < k; ++i) {
      // 1 - u lies in (0, 1], so t lies in (lo, hi].
      double t = lo + (1.0 - uniform01(rng)) * (hi - lo);
      if (t <= lo) t = std::nextafter(lo, hi);
      times.push_back(std::min(t, hi));
    }
  }
  std::sort(times.begin(), times.end());
  return times;
}

}  // namespace

std::vector<std::vector<double>> sample_replicates(const SimulationConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<double>> out(static_cast<std::size_t>(cfg.replicates));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sample_one(cfg.intensity, derive_seed(cfg.seed, i));
  }
  return out;
}

EventSeries sample_events(const SimulationConfig& cfg) {
  auto reps = sample_replicates(cfg);
  std::size_t total = 0;
  for (const auto& r : reps) total += r.size();
  std::vector<double> pooled;
  pooled.reserve(total);
  for (const auto& r : reps) pooled.insert(pooled.end(), r.begin(), r.end());
  std::sort(pooled.begin(), pooled.end());
  return EventSeries(std::move(pooled), cfg.replicates);
}

StepFunction example_intensity(int id) {
  // Editable defaults: gaps of at least 1/8 for example 1 and exactly 1/16 for
  // example 2, with jumps of several units so both are resolvable at n ~ 10^3.
  switch (id) {
    case 1:
      return StepFunction({0.0, 0.15, 0.3, 0.5, 0.65, 0.85, 1.0},
                          {10.0, 30.0, 15.0, 40.0, 20.0, 5.0});
    case 2:
      return StepFunction(
          {0.0, 0.0625, 0.125, 0.1875, 0.25, 0.3125, 0.375, 0.4375, 0.5, 0.5625, 0.625, 0.6875,
           0.75, 0.8125, 0.875, 0.9375, 1.0},
          {10.0, 25.0, 5.0, 20.0, 35.0, 15.0, 30.0, 10.0, 40.0, 20.0, 5.0, 25.0, 45.0, 15.0, 30.0,
           10.0});
    default:
      throw ConfigError("unknown example intensity id " + std::to_string(id) +
                        " (expected 1 or 2)");
  }
}

}  // namespace tvpoint
