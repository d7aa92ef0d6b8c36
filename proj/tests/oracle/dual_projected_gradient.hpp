#pragma once

// Test-only reference solver for the weighted TV prox. It never calls into
// the library: it solves the box-constrained dual
//
//   min_r 1/2 sum_k (y[k] - r[k] + r[k-1])^2,  |r[i]| <= w[i+1],  r[-1] = r[m-1] = 0
//
// by accelerated projected gradient (step 1/4, the Lipschitz bound of D D^T)
// with gradient-based restart, and returns beta = y - D^T r.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace tvpoint::oracle {

struct DualResult {
  std::vector<double> beta;
  std::size_t iterations = 0;
  bool converged = false;
};

inline std::vector<double> primal_from_dual(const std::vector<double>& y,
                                            const std::vector<double>& r) {
  const std::size_t m = y.size();
  std::vector<double> beta(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double right = k + 1 < m ? r[k] : 0.0;
    const double left = k > 0 ? r[k - 1] : 0.0;
    beta[k] = y[k] - right + left;
  }
  return beta;
}

inline DualResult dual_projected_gradient(const std::vector<double>& y,
                                          const std::vector<double>& w,
                                          std::size_t max_iterations = 2'000'000,
                                          double tolerance = 1e-15) {
  const std::size_t m = y.size();
  DualResult out;
  if (m < 2) {
    out.beta = y;
    out.converged = true;
    return out;
  }
  const std::size_t e = m - 1;
  std::vector<double> r(e, 0.0), r_prev(e, 0.0), z(e, 0.0);
  double t = 1.0;
  double scale = 1.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  std::size_t quiet = 0;

  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const auto beta = primal_from_dual(y, z);
    double step_norm = 0.0;
    double restart_test = 0.0;
    r_prev = r;
    for (std::size_t i = 0; i < e; ++i) {
      const double grad = beta[i + 1] - beta[i];
      r[i] = std::clamp(z[i] - 0.25 * grad, -w[i + 1], w[i + 1]);
      step_norm = std::max(step_norm, std::abs(r[i] - r_prev[i]));
      restart_test += (z[i] - r[i]) * (r[i] - r_prev[i]);
    }
    if (restart_test > 0.0) {
      t = 1.0;
      z = r;
    } else {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      const double momentum = (t - 1.0) / t_next;
      for (std::size_t i = 0; i < e; ++i) z[i] = r[i] + momentum * (r[i] - r_prev[i]);
      t = t_next;
    }
    out.iterations = it;
    quiet = step_norm <= tolerance * scale ? quiet + 1 : 0;
    if (quiet >= 50) {
      out.converged = true;
      break;
    }
  }
  out.beta = primal_from_dual(y, r);
  return out;
}

}  // namespace tvpoint::oracle
