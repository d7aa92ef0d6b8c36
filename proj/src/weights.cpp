#include "tvpoint/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tvpoint/error.hpp"
#include "tvpoint/grid.hpp"

namespace tvpoint {

namespace {

constexpr double kE = std::numbers::e;

// 4/3 + epsilon appears in every Bernstein term.
double bernstein_slack(const WeightConfig& cfg) { return 4.0 / 3.0 + cfg.epsilon; }

}  // namespace

void WeightConfig::validate() const {
  if (!(std::isfinite(x) && x > 0.0)) throw ConfigError("confidence parameter x must be > 0");
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  if (!(std::isfinite(c_h) && c_h > 1.0)) throw ConfigError("c_h must be > 1");
  if (!(std::isfinite(c_0) && c_0 > 0.0)) throw ConfigError("c_0 must be > 0");
  if (!(std::isfinite(scale) && scale > 0.0)) throw ConfigError("weight scale must be > 0");
  // The iterated-log denominator e*c_0*(z+1) - 2(4/3+eps)c_h stays positive for
  // every z > 0 iff e*c_0 >= 2(4/3+eps)c_h. The default constants sit exactly on
  // the boundary, hence the relative slack.
  const double lhs = kE * c_0;
  const double rhs = 2.0 * (4.0 / 3.0 + epsilon) * c_h;
  if (lhs < rhs * (1.0 - 1e-12)) {
    throw ConfigError("constants violate e*c_0 >= 2*(4/3+epsilon)*c_h");
  }
}

BernsteinConstants bernstein_constants(const WeightConfig& cfg) {
  cfg.validate();
  const double eps = cfg.epsilon;
  const double c1_eps = 2.0 * std::sqrt(1.0 + eps);
  const double c3_eps =
      std::sqrt(2.0 * std::max(cfg.c_0, 2.0 * (1.0 + eps) * bernstein_slack(cfg))) + 1.0 / 3.0;
  return {2.0 * c1_eps, 2.0 * c3_eps};
}

TailStatistics tail_statistics_from_counts(std::span<const std::int64_t> counts,
                                           std::int64_t replicates, const WeightConfig& cfg) {
  cfg.validate();
  if (counts.empty()) throw DimensionError("bin count m must be >= 1");
  if (replicates < 1) throw InputError("replicate count n must be >= 1");
  const std::size_t m = counts.size();
  const double n = static_cast<double>(replicates);
  const double z = cfg.x + std::log(static_cast<double>(m));
  const double slack = bernstein_slack(cfg);
  const double denom = kE * cfg.c_0 * (z + 1.0) - 2.0 * slack * cfg.c_h;

  TailStatistics ts;
  ts.v_hat.resize(m);
  ts.h_hat.resize(m);
  std::int64_t tail = 0;
  for (std::size_t j = m; j-- > 0;) {
    tail += counts[j];
    ts.v_hat[j] = static_cast<double>(tail) / n;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double ratio = (2.0 * kE * n * ts.v_hat[j] + 2.0 * kE * slack * z) / denom;
    ts.h_hat[j] = cfg.c_h * std::log(std::log(std::max(ratio, kE)));
  }
  return ts;
}

TailStatistics tail_statistics(const EventSeries& events, std::size_t m, const WeightConfig& cfg) {
  if (m == 0) throw DimensionError("bin count m must be >= 1");
  return tail_statistics_from_counts(grid_counts(events, m), events.replicates(), cfg);
}

WeightVector data_driven_weights_from_counts(std::span<const std::int64_t> counts,
                                             std::int64_t replicates, const WeightConfig& cfg) {
  const auto ts = tail_statistics_from_counts(counts, replicates, cfg);
  const auto [c1, c2] = bernstein_constants(cfg);
  const std::size_t m = counts.size();
  const double md = static_cast<double>(m);
  const double n = static_cast<double>(replicates);
  const double z = cfg.x + std::log(md);

  std::vector<double> w(m, 0.0);
  for (std::size_t j = 1; j < m; ++j) {
    const double zh = z + ts.h_hat[j];
    w[j] = cfg.scale *
           (c1 * std::sqrt(md * zh * ts.v_hat[j] / n) + c2 * std::sqrt(md) * (zh + 1.0) / n);
  }
  return WeightVector(std::move(w));
}

WeightVector data_driven_weights(const EventSeries& events, std::size_t m,
                                 const WeightConfig& cfg) {
  if (m == 0) throw DimensionError("bin count m must be >= 1");
  return data_driven_weights_from_counts(grid_counts(events, m), events.replicates(), cfg);
}

WeightVector uniform_weights(std::size_t m, double scale) {
  if (m == 0) throw DimensionError("bin count m must be >= 1");
  if (!(std::isfinite(scale) && scale >= 0.0)) throw ConfigError("uniform weight must be >= 0");
  std::vector<double> w(m, scale);
  w[0] = 0.0;
  return WeightVector(std::move(w));
}

}  // namespace tvpoint
