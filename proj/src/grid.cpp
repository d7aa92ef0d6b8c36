#include "tvpoint/grid.hpp"

#include <cmath>

#include "tvpoint/error.hpp"

namespace tvpoint {

std::size_t grid_bin(double t, std::size_t m) {
  const double md = static_cast<double>(m);
  double guess = std::ceil(t * md) - 1.0;
  if (guess < 0.0) guess = 0.0;
  if (guess > md - 1.0) guess = md - 1.0;
  auto j = static_cast<std::size_t>(guess);
  // ceil(t*m) can be off by one near an edge; settle against the edges themselves.
  while (j > 0 && t <= grid_edge(j - 1, m)) --j;
  while (j + 1 < m && t > grid_edge(j, m)) ++j;
  return j;
}

std::vector<std::int64_t> grid_counts(const EventSeries& events, std::size_t m) {
  if (m == 0) throw DimensionError("bin count m must be >= 1");
  std::vector<std::int64_t> counts(m, 0);
  for (double t : events.times()) ++counts[grid_bin(t, m)];
  return counts;
}

}  // namespace tvpoint
