#include "tvpoint/tvprox.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvpoint/error.hpp"

namespace tvpoint {

namespace {

void check_lengths(std::size_t signal, std::size_t other, const char* what) {
  if (signal != other) {
    throw DimensionError(std::string(what) + " length " + std::to_string(other) +
                         " does not match signal length " + std::to_string(signal));
  }
}

}  // namespace

ProxSolution prox_weighted_tv(const BinnedSignal& signal, const WeightVector& weights) {
  check_lengths(signal.size(), weights.size(), "weight");
  const auto y = signal.values();
  const auto w = weights.values();
  const std::size_t m = y.size();

  // bound(i) caps the dual after position i: the weight of edge (i, i+1), and
  // 0 after the last sample where the dual must vanish.
  const auto bound = [&](std::size_t i) { return i + 1 < m ? w[i + 1] : 0.0; };

  std::vector<double> beta(m);
  std::size_t k = 0;
  std::size_t k0 = 0;      // first position of the open plateau
  std::size_t kminus = 0;  // last position where a downward jump is admissible
  std::size_t kplus = 0;   // last position where an upward jump is admissible
  double vmin = 0.0, vmax = 0.0;  // lowest / highest admissible plateau level
  double umin = 0.0, umax = 0.0;  // dual after position k at level vmin / vmax

  // Opens a plateau at `start`; `incoming` is the dual value on the edge
  // entering it (0 at the left end, +-w at a validated jump).
  const auto open = [&](std::size_t start, double incoming) {
    k = k0 = kminus = kplus = start;
    const double b = bound(start);
    vmin = y[start] + incoming - b;
    vmax = y[start] + incoming + b;
    umin = b;
    umax = -b;
  };
  const auto commit = [&](std::size_t last, double level) {
    std::fill(beta.begin() + static_cast<std::ptrdiff_t>(k0),
              beta.begin() + static_cast<std::ptrdiff_t>(last) + 1, level);
  };

  open(0, 0.0);
  while (k + 1 < m) {
    const double b = bound(k + 1);
    const double umin_next = umin + y[k + 1] - vmin;
    const double umax_next = umax + y[k + 1] - vmax;
    if (umin_next < -b) {
      // Even the lowest level cannot absorb y[k+1]: jump down after kminus.
      commit(kminus, vmin);
      open(kminus + 1, w[kminus + 1]);
    } else if (umax_next > b) {
      commit(kplus, vmax);
      open(kplus + 1, -w[kplus + 1]);
    } else {
      ++k;
      umin = umin_next;
      umax = umax_next;
      const double len = static_cast<double>(k - k0 + 1);
      if (umin >= b) {
        vmin += (umin - b) / len;
        umin = b;
        kminus = k;
      }
      if (umax <= -b) {
        vmax += (umax + b) / len;
        umax = -b;
        kplus = k;
      }
    }
  }
  // Both bounds were pulled onto the level that zeroes the final dual.
  commit(m - 1, vmin);

  ProxSolution sol;
  sol.theta.assign(m + 1, 0.0);
  double r = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    r += y[i] - beta[i];
    if (beta[i + 1] > beta[i]) {
      r = -w[i + 1];
    } else if (beta[i + 1] < beta[i]) {
      r = w[i + 1];
    }
    sol.theta[i + 1] = r;
  }
  sol.kkt_residual = kkt_residual(signal, weights, beta);
  sol.beta = std::move(beta);
  return sol;
}

std::vector<double> reconstruct_dual(const BinnedSignal& signal, std::span<const double> beta) {
  check_lengths(signal.size(), beta.size(), "beta");
  const std::size_t m = beta.size();
  std::vector<double> theta(m + 1, 0.0);
  for (std::size_t k = m; k-- > 0;) theta[k] = theta[k + 1] + beta[k] - signal[k];
  return theta;
}

double suffix_sum_violation(const BinnedSignal& signal, const WeightVector& weights,
                            std::span<const double> beta) {
  check_lengths(signal.size(), weights.size(), "weight");
  check_lengths(signal.size(), beta.size(), "beta");
  // Neumaier-compensated suffix sums of the residual y - beta.
  double sum = 0.0, carry = 0.0, worst = 0.0;
  for (std::size_t j = beta.size(); j-- > 0;) {
    const double term = signal[j] - beta[j];
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    worst = std::max(worst, std::abs(sum + carry) - weights[j]);
  }
  return worst;
}

double kkt_residual(const BinnedSignal& signal, const WeightVector& weights,
                    std::span<const double> beta) {
  check_lengths(signal.size(), weights.size(), "weight");
  const auto theta = reconstruct_dual(signal, beta);
  double worst = 0.0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    worst = std::max(worst, std::abs(theta[k]) - weights[k]);
    if (k > 0 && beta[k] != beta[k - 1]) {
      const double target = beta[k] > beta[k - 1] ? -weights[k] : weights[k];
      worst = std::max(worst, std::abs(theta[k] - target));
    }
  }
  return std::max(worst, suffix_sum_violation(signal, weights, beta));
}

}  // namespace tvpoint
