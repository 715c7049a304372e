#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "rsproc/insertion.hpp"
#include "rsproc/permutation.hpp"
#include "rsproc/tableau.hpp"

namespace rsproc {

// Row-insertion correspondence: a permutation maps to a pair of same-shape
// standard tableaux (insertion tableau, recording tableau).
inline std::pair<StandardTableau, StandardTableau> rs(const Permutation& p) {
  std::vector<std::vector<int>> ins, rec;
  for (int i = 1; i <= p.size(); ++i) {
    const auto [r, c] = detail::bump_insert(ins, p.apply(i));
    if (static_cast<std::size_t>(r) == rec.size()) rec.push_back({});
    rec[static_cast<std::size_t>(r)].push_back(i);  // new cell is always at a row end
  }
  return {StandardTableau(ins), StandardTableau(rec)};
}

// Inverse correspondence: peel cells in decreasing recording order.
inline Permutation rs_inverse(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.outer() != recording.outer() || !insertion.inner().empty() ||
      !recording.inner().empty())
    throw std::invalid_argument("rs_inverse: tableaux must share a straight shape");
  const int n = static_cast<int>(insertion.size());

  std::vector<std::pair<int, int>> where(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r < recording.num_rows(); ++r)
    for (int c = 0; c < recording.outer().rows()[static_cast<std::size_t>(r)]; ++c)
      where[static_cast<std::size_t>(recording.entry(r, c))] = {r, c};

  std::vector<std::vector<int>> ins = insertion.entry_rows();
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    const auto [r, c] = where[static_cast<std::size_t>(step)];
    one_line[static_cast<std::size_t>(step - 1)] = detail::bump_remove(ins, r, c);
  }
  return Permutation(std::move(one_line));
}

}  // namespace rsproc
