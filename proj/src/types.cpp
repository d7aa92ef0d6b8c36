#include "tvpoint/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvpoint/error.hpp"

namespace tvpoint {

BinnedSignal::BinnedSignal(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("binned signal must have at least one bin");
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("binned signal contains a non-finite value");
  }
}

double BinnedSignal::max_abs() const {
  double r = 0.0;
  for (double v : values_) r = std::max(r, std::abs(v));
  return r;
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw DimensionError("weight vector must have at least one entry");
  if (w_[0] != 0.0) throw InputError("the first weight must be 0 (no edge precedes position 1)");
  for (double v : w_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InputError("weights must be finite and nonnegative");
    }
  }
}

double WeightVector::max() const { return *std::max_element(w_.begin(), w_.end()); }

WeightVector WeightVector::scaled(double factor) const {
  std::vector<double> out(w_);
  for (double& v : out) v *= factor;
  return WeightVector(std::move(out));
}

EventSeries::EventSeries(std::vector<double> times, std::int64_t replicates)
    : times_(std::move(times)), replicates_(replicates) {
  if (replicates_ < 1) throw InputError("replicate count n must be >= 1");
  if (!std::is_sorted(times_.begin(), times_.end())) std::sort(times_.begin(), times_.end());
  for (double t : times_) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw InputError("event time " + std::to_string(t) + " is outside (0, 1]");
    }
  }
}

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> levels) {
  if (levels.empty() || breakpoints.size() != levels.size() + 1) {
    throw DimensionError("step function needs one more breakpoint than levels");
  }
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0) {
    throw InputError("step function breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw InputError("step function breakpoints must be strictly increasing");
    }
  }
  for (double v : levels) {
    if (!std::isfinite(v)) throw InputError("step function level is not finite");
  }
  breakpoints_.push_back(0.0);
  levels_.push_back(levels[0]);
  for (std::size_t l = 1; l < levels.size(); ++l) {
    if (levels[l] != levels_.back()) {
      breakpoints_.push_back(breakpoints[l]);
      levels_.push_back(levels[l]);
    }
  }
  breakpoints_.push_back(1.0);
}

StepFunction StepFunction::constant(double level) { return StepFunction({0.0, 1.0}, {level}); }

std::vector<double> StepFunction::change_point_locations() const {
  return {breakpoints_.begin() + 1, breakpoints_.end() - 1};
}

double StepFunction::operator()(double t) const {
  // First breakpoint >= t closes the segment containing t.
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, t);
  return levels_[static_cast<std::size_t>(it - (breakpoints_.begin() + 1))];
}

double StepFunction::integral() const {
  double s = 0.0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    s += levels_[l] * (breakpoints_[l + 1] - breakpoints_[l]);
  }
  return s;
}

double StepFunction::squared_integral() const {
  double s = 0.0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    s += levels_[l] * levels_[l] * (breakpoints_[l + 1] - breakpoints_[l]);
  }
  return s;
}

}  // namespace tvpoint
