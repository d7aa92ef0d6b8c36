#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tvpoint/types.hpp"

namespace tvpoint {

/// Right edge of bin j (0-based) of the uniform m-grid, i.e. (j+1)/m.
inline double grid_edge(std::size_t j, std::size_t m) {
  return static_cast<double>(j + 1) / static_cast<double>(m);
}

/**
 * 0-based index of the bin ((j)/m, (j+1)/m] containing t, for t in (0, 1].
 *
 * The result is consistent with comparing t against grid_edge values, so a
 * step function on the grid evaluated at t returns the level of this bin.
 */
std::size_t grid_bin(double t, std::size_t m);

/// Raw (unscaled) event counts per bin.
std::vector<std::int64_t> grid_counts(const EventSeries& events, std::size_t m);

}  // namespace tvpoint
