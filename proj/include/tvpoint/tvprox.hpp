#pragma once

#include <span>
#include <vector>

#include "tvpoint/types.hpp"

namespace tvpoint {

/**
 * Minimiser of the weighted total-variation denoising problem together with
 * its dual certificate.
 *
 * theta has m+1 entries with theta[0] = theta[m] = 0 and
 * beta[k] = signal[k] - theta[k+1] + theta[k]. Interior entries satisfy
 * |theta[k]| <= w[k], with equality and sign -sgn(beta[k] - beta[k-1]) at
 * every jump.
 */
struct ProxSolution {
  std::vector<double> beta;
  std::vector<double> theta;
  double kkt_residual = 0.0;
};

/**
 * Exact proximal operator of the weighted total variation,
 *
 *   argmin_beta 1/2 ||y - beta||^2 + sum_{j>=1} w[j] |beta[j] - beta[j-1]|.
 *
 * Single forward sweep over the signal that tracks the lowest and highest
 * admissible level of the current plateau, backtracking to the last feasible
 * jump location when both bounds are exhausted. Linear time on typical input.
 *
 * Throws DimensionError when the lengths disagree.
 */
ProxSolution prox_weighted_tv(const BinnedSignal& signal, const WeightVector& weights);

/**
 * Largest violation of the optimality conditions of prox_weighted_tv at beta.
 *
 * Two routes are evaluated and the maximum returned: the dual vector
 * reconstructed backwards from beta (box constraint plus the sign condition at
 * every strict jump), and the suffix-sum conditions
 * |sum_{q>=j} (y[q] - beta[q])| <= w[j] accumulated with compensated
 * summation. The result is zero exactly when beta is the minimiser.
 */
double kkt_residual(const BinnedSignal& signal, const WeightVector& weights,
                    std::span<const double> beta);

/// Suffix-sum route only: max_j max(0, |sum_{q>=j}(y[q]-beta[q])| - w[j]).
double suffix_sum_violation(const BinnedSignal& signal, const WeightVector& weights,
                            std::span<const double> beta);

/// Dual vector rebuilt from beta, theta[m] = 0 and theta[k] = theta[k+1] + beta[k] - y[k].
std::vector<double> reconstruct_dual(const BinnedSignal& signal, std::span<const double> beta);

}  // namespace tvpoint
