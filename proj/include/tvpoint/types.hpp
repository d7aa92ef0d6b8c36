#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tvpoint {

/**
 * Scaled bin counts on m uniform bins of (0, 1].
 *
 * Entry j (0-based) holds sqrt(m) times the mean number of events per
 * replicate falling in ((j)/m, (j+1)/m]. The solver accepts any finite
 * vector; values produced from event data are nonnegative.
 */
class BinnedSignal {
 public:
  explicit BinnedSignal(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double max_abs() const;

 private:
  std::vector<double> values_;
};

/**
 * Per-edge penalty weights.
 *
 * Stored 0-based: w[0] is always 0 and w[j] (j >= 1) penalises the edge
 * between positions j-1 and j.
 */
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);

  std::span<const double> values() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t j) const { return w_[j]; }
  double max() const;

  /// Every weight multiplied by factor (factor >= 0).
  WeightVector scaled(double factor) const;

 private:
  std::vector<double> w_;
};

/// Pooled event times from n i.i.d. replicates, sorted, each in (0, 1].
class EventSeries {
 public:
  EventSeries() = default;
  EventSeries(std::vector<double> times, std::int64_t replicates);

  std::span<const double> times() const { return times_; }
  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  std::int64_t replicates() const { return replicates_; }

 private:
  std::vector<double> times_;
  std::int64_t replicates_ = 1;
};

/**
 * Piecewise-constant function on [0, 1] in canonical form.
 *
 * Segment l covers (breakpoints[l], breakpoints[l+1]]; the value at t = 0 is
 * the first level. Adjacent equal levels are merged on construction.
 */
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> levels);

  /// The constant function on [0, 1].
  static StepFunction constant(double level);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> levels() const { return levels_; }
  std::size_t segments() const { return levels_.size(); }
  std::size_t change_points() const { return levels_.size() - 1; }

  /// Interior breakpoints, i.e. the change-point locations.
  std::vector<double> change_point_locations() const;

  double operator()(double t) const;
  double integral() const;
  double squared_integral() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> levels_;
};

}  // namespace tvpoint
