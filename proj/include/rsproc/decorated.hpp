#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsproc/point_config.hpp"
#include "rsproc/rs.hpp"
#include "rsproc/tableau.hpp"

namespace rsproc {

// Same-shape standard tableau pair whose entries carry real decorations in
// [0, theta]: entry j of the left tableau carries the j-th smallest decoration
// on the left list, likewise on the right. Decoration lists are strictly
// increasing and of length |shape|.
class DecoratedTableauPair {
 public:
  DecoratedTableauPair() = default;

  DecoratedTableauPair(double theta, StandardTableau left, StandardTableau right,
                       std::vector<double> left_decorations, std::vector<double> right_decorations)
      : theta_(theta),
        left_(std::move(left)),
        right_(std::move(right)),
        left_dec_(std::move(left_decorations)),
        right_dec_(std::move(right_decorations)) {
    if (!(theta_ > 0)) throw std::invalid_argument("DecoratedTableauPair: theta must be positive");
    if (left_.outer() != right_.outer() || !left_.inner().empty() || !right_.inner().empty())
      throw std::invalid_argument("DecoratedTableauPair: tableaux must share a straight shape");
    const auto n = static_cast<std::size_t>(left_.size());
    if (left_dec_.size() != n || right_dec_.size() != n)
      throw std::invalid_argument("DecoratedTableauPair: decoration count must match shape size");
    for (const auto* dec : {&left_dec_, &right_dec_})
      for (std::size_t i = 0; i < dec->size(); ++i) {
        if (!((*dec)[i] >= 0 && (*dec)[i] <= theta_))
          throw std::invalid_argument("DecoratedTableauPair: decoration outside [0, theta]");
        if (i > 0 && !((*dec)[i - 1] < (*dec)[i]))
          throw std::invalid_argument("DecoratedTableauPair: decorations must strictly increase");
      }
  }

  double theta() const { return theta_; }
  const StandardTableau& left() const { return left_; }
  const StandardTableau& right() const { return right_; }
  const std::vector<double>& left_decorations() const { return left_dec_; }
  const std::vector<double>& right_decorations() const { return right_dec_; }
  long long size() const { return left_.size(); }
  const YoungDiagram& shape() const { return left_.outer(); }

  friend bool operator==(const DecoratedTableauPair&, const DecoratedTableauPair&) = default;

 private:
  double theta_ = 1;
  StandardTableau left_, right_;
  std::vector<double> left_dec_, right_dec_;
};

// Decorated correspondence: x-coordinates (sorted) decorate the recording side,
// y-coordinates (sorted) decorate the insertion side, and the permutation that
// ranks y by x-order drives the row insertion.
inline DecoratedTableauPair drs(const PointConfiguration& config) {
  const auto perm = associated_permutation(config);
  auto [ins, rec] = rs(perm);
  std::vector<double> xs, ys;
  xs.reserve(config.points().size());
  ys.reserve(config.points().size());
  for (const auto& p : config.points()) {
    xs.push_back(p.x);  // already sorted by construction
    ys.push_back(p.y);
  }
  std::sort(ys.begin(), ys.end());
  return DecoratedTableauPair(config.theta(), std::move(ins), std::move(rec), std::move(ys),
                              std::move(xs));
}

inline PointConfiguration drs_inverse(const DecoratedTableauPair& pair) {
  const auto perm = rs_inverse(pair.left(), pair.right());
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(perm.size()));
  for (int i = 1; i <= perm.size(); ++i)
    pts.push_back({pair.right_decorations()[static_cast<std::size_t>(i - 1)],
                   pair.left_decorations()[static_cast<std::size_t>(perm.apply(i) - 1)]});
  return PointConfiguration(pair.theta(), std::move(pts));
}

}  // namespace rsproc
