#pragma once

#include <stdexcept>
#include <vector>

#include "rsproc/bigint.hpp"

namespace rsproc {

enum class StepDirection { up, down };

namespace detail {

// Transition weight of one walker over a window of width t: t^gap / gap! for
// a move of `gap` >= 0 levels in the walk direction, zero against it. The
// gap 0 weight is 1, the staying weight demanded by the determinant identity
// with bounded-row counts.
inline BigRat km_weight(long long from, long long to, const BigRat& t, StepDirection direction) {
  const long long gap = direction == StepDirection::up ? to - from : from - to;
  if (gap < 0) return BigRat(0);
  return pow_rat(t, gap) / BigRat(factorial(static_cast<int>(gap)));
}

inline void km_validate(const std::vector<long long>& levels_from,
                        const std::vector<long long>& levels_to) {
  if (levels_from.size() != levels_to.size())
    throw std::invalid_argument("km_block: level lists must have equal length");
  for (std::size_t i = 1; i < levels_from.size(); ++i) {
    if (!(levels_from[i - 1] > levels_from[i]) || !(levels_to[i - 1] > levels_to[i]))
      throw std::invalid_argument("km_block: level lists must strictly decrease");
  }
}

}  // namespace detail

// Determinant of one-walker transition weights between two strictly
// decreasing level lists: the non-crossing ensemble weight of the level
// system over a window of width t.
inline BigRat km_block_exact(const std::vector<long long>& levels_from,
                             const std::vector<long long>& levels_to, const BigRat& t,
                             StepDirection direction) {
  if (t < 0) throw std::invalid_argument("km_block: t must be nonnegative");
  detail::km_validate(levels_from, levels_to);
  const std::size_t n = levels_from.size();
  if (n == 0) return BigRat(1);
  std::vector<std::vector<BigRat>> matrix(n, std::vector<BigRat>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      matrix[a][b] = detail::km_weight(levels_from[a], levels_to[b], t, direction);
  return det_rational(std::move(matrix));
}

inline double km_block(const std::vector<long long>& levels_from,
                       const std::vector<long long>& levels_to, double t,
                       StepDirection direction) {
  return static_cast<double>(km_block_exact(levels_from, levels_to, rat_from_double(t), direction));
}

}  // namespace rsproc
