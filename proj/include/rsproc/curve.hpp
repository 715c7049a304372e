#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rsproc/insertion.hpp"
#include "rsproc/partition.hpp"
#include "rsproc/point_config.hpp"

namespace rsproc {

// Shape of the insertion tableau of the points inside the moving window
// [0, u(t)] x [0, v(t)], where the window keeps full width and height theta + t
// for t <= 0 and full height and width theta - t for t >= 0. Closed
// comparisons on both sides, evaluated in appearance-time form (y - theta <= t
// opens a point, theta - x >= t keeps it) so the window agrees bit-for-bit
// with the decorated pair's views at event times.
inline YoungDiagram curve_process(const PointConfiguration& config, double t) {
  const double theta = config.theta();
  if (!(std::abs(t) <= theta))
    throw std::invalid_argument("curve_process: time outside [-theta, theta]");

  std::vector<Point> kept;  // x-order inherited from the configuration
  for (const auto& p : config.points()) {
    const bool inside = t <= 0 ? p.y - theta <= t : theta - p.x >= t;
    if (inside) kept.push_back(p);
  }

  std::vector<double> ys;
  ys.reserve(kept.size());
  for (const auto& p : kept) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());

  std::vector<std::vector<int>> rows;
  for (const auto& p : kept) {
    const int rank =
        static_cast<int>(std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin()) + 1;
    detail::bump_insert(rows, rank);
  }
  std::vector<int> lens;
  lens.reserve(rows.size());
  for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(lens));
}

}  // namespace rsproc
