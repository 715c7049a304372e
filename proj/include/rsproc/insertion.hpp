#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rsproc::detail {

// One row-insertion pass: the value displaces the leftmost strictly greater
// entry and the displaced value recurses into the next row; a value greater or
// equal to everything is appended. Returns the (row, col) of the new cell.
// The same rule serves both the distinct-entry and repeated-entry cases.
inline std::pair<int, int> bump_insert(std::vector<std::vector<int>>& rows, int value) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({value});
      return {static_cast<int>(r), 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, value);
  }
}

// Inverse pass starting from a corner cell: removes it and walks upward, each
// row surrendering its rightmost entry strictly smaller than the travelling
// value. Returns the value whose insertion created that corner.
inline int bump_remove(std::vector<std::vector<int>>& rows, int row, int col) {
  if (row < 0 || static_cast<std::size_t>(row) >= rows.size() ||
      col != static_cast<int>(rows[static_cast<std::size_t>(row)].size()) - 1)
    throw std::invalid_argument("bump_remove: not a row-end cell");
  if (static_cast<std::size_t>(row) + 1 < rows.size() &&
      static_cast<int>(rows[static_cast<std::size_t>(row) + 1].size()) > col)
    throw std::invalid_argument("bump_remove: not a corner cell");
  int value = rows[static_cast<std::size_t>(row)].back();
  rows[static_cast<std::size_t>(row)].pop_back();
  if (rows[static_cast<std::size_t>(row)].empty()) rows.pop_back();
  for (int r = row - 1; r >= 0; --r) {
    auto& above = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(above.begin(), above.end(), value);
    if (it == above.begin())
      throw std::invalid_argument("bump_remove: inconsistent tableau pair");
    --it;
    std::swap(*it, value);
  }
  return value;
}

}  // namespace rsproc::detail
