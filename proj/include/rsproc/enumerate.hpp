#pragma once

#include <stdexcept>
#include <vector>

#include "rsproc/partition.hpp"
#include "rsproc/tableau.hpp"

namespace rsproc {

inline constexpr long long kEnumerateSizeCap = 10;
inline constexpr int kEnumerateEntryCap = 6;

// All standard fillings of a skew shape, by growing the inner diagram one cell
// per step inside the outer diagram. Exponential; capped to stay honest.
inline std::vector<StandardTableau> enumerate_standard(const SkewShape& shape,
                                                       long long size_cap = kEnumerateSizeCap) {
  if (shape.size() > size_cap)
    throw std::invalid_argument("enumerate_standard: shape size exceeds cap");
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  const int n = static_cast<int>(shape.size());

  std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.num_rows()));
  for (int r = 0; r < outer.num_rows(); ++r)
    grid[static_cast<std::size_t>(r)].resize(
        static_cast<std::size_t>(outer.rows()[static_cast<std::size_t>(r)] - inner.row_or_zero(r)), 0);

  std::vector<StandardTableau> out;
  YoungDiagram current = inner;
  auto rec = [&](auto&& self, int step) -> void {
    if (step > n) {
      out.emplace_back(shape, grid);
      return;
    }
    for (const auto& [r, c] : current.addable_cells()) {
      if (!outer.has_cell(r, c)) continue;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner.row_or_zero(r))] = step;
      YoungDiagram saved = current;
      current = current.with_cell_added(r);
      self(self, step + 1);
      current = saved;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner.row_or_zero(r))] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

// All semistandard fillings with entries bounded by k, cell-by-cell backtracking.
inline std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int k,
                                                       long long size_cap = kEnumerateSizeCap,
                                                       int entry_cap = kEnumerateEntryCap) {
  if (k < 0) throw std::invalid_argument("enumerate_ssyt: negative entry bound");
  if (shape.size() > size_cap)
    throw std::invalid_argument("enumerate_ssyt: shape size exceeds cap");
  if (k > entry_cap) throw std::invalid_argument("enumerate_ssyt: entry bound exceeds cap");

  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.num_rows()));
  std::vector<std::pair<int, int>> cells;  // row-major order
  for (int r = 0; r < outer.num_rows(); ++r) {
    grid[static_cast<std::size_t>(r)].resize(
        static_cast<std::size_t>(outer.rows()[static_cast<std::size_t>(r)] - inner.row_or_zero(r)), 0);
    for (int c = inner.row_or_zero(r); c < outer.rows()[static_cast<std::size_t>(r)]; ++c)
      cells.emplace_back(r, c);
  }

  auto at = [&](int r, int c) -> int& {
    return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner.row_or_zero(r))];
  };

  std::vector<SemistandardTableau> out;
  if (k == 0 && shape.size() > 0) return out;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.emplace_back(shape, k, grid);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c - 1 >= inner.row_or_zero(r)) lo = std::max(lo, at(r, c - 1));          // weak along row
    if (r > 0 && shape.has_cell(r - 1, c)) lo = std::max(lo, at(r - 1, c) + 1);  // strict down column
    for (int v = lo; v <= k; ++v) {
      at(r, c) = v;
      self(self, idx + 1);
    }
    at(r, c) = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace rsproc
