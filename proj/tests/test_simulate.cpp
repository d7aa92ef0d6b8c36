#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "tvpoint/error.hpp"
#include "tvpoint/grid.hpp"
#include "tvpoint/simulate.hpp"

using namespace tvpoint;

TEST_CASE("zero intensity produces no events") {
  const auto ev = sample_events({StepFunction::constant(0.0), 50, 1});
  CHECK(ev.empty());
  CHECK(ev.replicates() == 50);
}

TEST_CASE("total count has mean n * lambda") {
  const double lambda = 3.5;
  const std::int64_t n = 4;
  const int seeds = 1000;
  double sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    sum += static_cast<double>(
        sample_events({StepFunction::constant(lambda), n, static_cast<std::uint64_t>(s)}).size());
  }
  const double mean = sum / seeds;
  const double se = std::sqrt(n * lambda / seeds);
  CHECK(std::abs(mean - n * lambda) <= 3 * se);
}

TEST_CASE("a silent segment stays silent") {
  const auto ev = sample_events({StepFunction({0, 0.5, 1}, {10, 0}), 200, 9});
  CHECK_FALSE(ev.empty());
  for (double t : ev.times()) CHECK(t <= 0.5);
}

TEST_CASE("bundled example intensities") {
  const auto one = example_intensity(1);
  const auto two = example_intensity(2);
  CHECK(one.segments() == 6);
  CHECK(one.change_points() == 5);
  CHECK(two.segments() == 16);
  CHECK(two.change_points() == 15);
  for (const auto* f : {&one, &two}) {
    for (double v : f->levels()) CHECK(v >= 0.0);
    for (std::size_t i = 1; i < f->breakpoints().size(); ++i) {
      CHECK(f->breakpoints()[i] > f->breakpoints()[i - 1]);
    }
  }
  for (std::size_t i = 1; i < one.breakpoints().size(); ++i) {
    CHECK(one.breakpoints()[i] - one.breakpoints()[i - 1] >= 0.125);
  }
  CHECK_THROWS_AS(example_intensity(3), ConfigError);
}

TEST_CASE("reproducible for a seed, different across seeds") {
  const SimulationConfig cfg{example_intensity(2), 30, 42};
  const auto a = sample_events(cfg);
  const auto b = sample_events(cfg);
  CHECK(std::vector<double>(a.times().begin(), a.times().end()) ==
        std::vector<double>(b.times().begin(), b.times().end()));
  const auto c = sample_events({example_intensity(2), 30, 43});
  CHECK(std::vector<double>(a.times().begin(), a.times().end()) !=
        std::vector<double>(c.times().begin(), c.times().end()));
}

TEST_CASE("invalid configuration") {
  CHECK_THROWS_AS(sample_events({StepFunction({0, 0.5, 1}, {1, -1}), 1, 0}), ConfigError);
  CHECK_THROWS_AS(sample_events({StepFunction::constant(1.0), 0, 0}), ConfigError);
}

TEST_CASE("pooled bin counts pass a Pearson test against their Poisson means") {
  const StepFunction truth({0, 0.3, 1}, {8, 2});
  const std::int64_t n = 2000;
  const std::size_t m = 20;
  const auto ev = sample_events({truth, n, 5});
  const auto counts = grid_counts(ev, m);
  double stat = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double lo = static_cast<double>(j) / m, hi = grid_edge(j, m);
    // Bin j straddles at most one breakpoint.
    double mass = 0.0;
    if (hi <= 0.3) {
      mass = 8 * (hi - lo);
    } else if (lo >= 0.3) {
      mass = 2 * (hi - lo);
    } else {
      mass = 8 * (0.3 - lo) + 2 * (hi - 0.3);
    }
    const double expected = static_cast<double>(n) * mass;
    stat += (counts[j] - expected) * (counts[j] - expected) / expected;
  }
  const boost::math::chi_squared dist(static_cast<double>(m));
  CHECK(stat <= boost::math::quantile(dist, 0.99));
}

TEST_CASE("counts on disjoint segments are uncorrelated") {
  const StepFunction truth({0, 0.5, 1}, {6, 6});
  const int seeds = 2000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int s = 0; s < seeds; ++s) {
    const auto ev = sample_events({truth, 1, static_cast<std::uint64_t>(s)});
    double left = 0, right = 0;
    for (double t : ev.times()) (t <= 0.5 ? left : right) += 1;
    sx += left, sy += right, sxx += left * left, syy += right * right, sxy += left * right;
  }
  const double cov = sxy / seeds - (sx / seeds) * (sy / seeds);
  const double vx = sxx / seeds - (sx / seeds) * (sx / seeds);
  const double vy = syy / seeds - (sy / seeds) * (sy / seeds);
  const double corr = cov / std::sqrt(vx * vy);
  // Under independence corr ~ N(0, 1/seeds).
  CHECK(std::abs(corr) <= 4.0 / std::sqrt(static_cast<double>(seeds)));
}

TEST_CASE("seed derivation separates streams") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 3, 4) == derive_seed(derive_seed(7, 3), 4));
}
