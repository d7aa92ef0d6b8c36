#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tvpoint::testing {

struct Instance {
  std::vector<double> signal;
  std::vector<double> weights;  // weights[0] == 0
};

/// Gaussian signal and i.i.d. uniform edge weights on a random magnitude
/// (1e-3 .. 50), occasionally with zero edges mixed in.
inline Instance random_instance(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double magnitudes[] = {1e-3, 0.05, 0.5, 3.0, 50.0};
  const double magnitude = magnitudes[rng() % 5];
  const bool sparse_zeros = rng() % 4 == 0;
  Instance in;
  in.signal.resize(m);
  in.weights.assign(m, 0.0);
  for (auto& v : in.signal) v = gauss(rng);
  for (std::size_t j = 1; j < m; ++j) {
    in.weights[j] = sparse_zeros && rng() % 5 == 0 ? 0.0 : magnitude * unit(rng);
  }
  return in;
}

inline double sup_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double sup_norm(std::span<const double> a) {
  double d = 0.0;
  for (double v : a) d = std::max(d, std::abs(v));
  return d;
}

}  // namespace tvpoint::testing
