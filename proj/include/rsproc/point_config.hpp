#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsproc/permutation.hpp"

namespace rsproc {

struct Point {
  double x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Finite planar configuration in the square [0, theta]^2 with pairwise distinct
// x-coordinates and pairwise distinct y-coordinates; stored sorted by x.
class PointConfiguration {
 public:
  PointConfiguration() = default;

  PointConfiguration(double theta, std::vector<Point> points)
      : theta_(theta), points_(std::move(points)) {
    if (!(theta_ > 0)) throw std::invalid_argument("PointConfiguration: theta must be positive");
    std::sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto& p = points_[i];
      if (!(p.x >= 0 && p.x <= theta_ && p.y >= 0 && p.y <= theta_))
        throw std::invalid_argument("PointConfiguration: point outside the square");
      if (i > 0 && points_[i - 1].x == p.x)
        throw std::invalid_argument("PointConfiguration: repeated x-coordinate");
    }
    std::vector<double> ys;
    ys.reserve(points_.size());
    for (const auto& p : points_) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
      throw std::invalid_argument("PointConfiguration: repeated y-coordinate");
  }

  double theta() const { return theta_; }
  const std::vector<Point>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  double theta_ = 1;
  std::vector<Point> points_;
};

// Rank the y-coordinates in x-order: position i (points sorted by x) maps to
// the rank of its y-coordinate among all y-coordinates, 1-based.
inline Permutation associated_permutation(const PointConfiguration& config) {
  const auto& pts = config.points();
  std::vector<double> ys;
  ys.reserve(pts.size());
  for (const auto& p : pts) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  std::vector<int> one_line;
  one_line.reserve(pts.size());
  for (const auto& p : pts) {
    const auto it = std::lower_bound(ys.begin(), ys.end(), p.y);
    one_line.push_back(static_cast<int>(it - ys.begin()) + 1);
  }
  return Permutation(std::move(one_line));
}

}  // namespace rsproc
