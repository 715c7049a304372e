#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsproc/partition.hpp"

namespace rsproc {

namespace detail {

// entries[r] holds the values of skew row r, i.e. columns inner_r .. outer_r - 1.
inline void check_entry_grid(const SkewShape& shape, const std::vector<std::vector<int>>& entries) {
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  if (static_cast<int>(entries.size()) != outer.num_rows())
    throw std::invalid_argument("tableau: entry grid has wrong number of rows");
  for (int r = 0; r < outer.num_rows(); ++r) {
    const int want = outer.rows()[static_cast<std::size_t>(r)] - inner.row_or_zero(r);
    if (static_cast<int>(entries[static_cast<std::size_t>(r)].size()) != want)
      throw std::invalid_argument("tableau: entry row length does not match shape");
  }
}

}  // namespace detail

// Skew-capable tableau with entries 1..n, each exactly once; rows strictly
// increase left to right, columns strictly increase top to bottom.
class StandardTableau {
 public:
  StandardTableau() = default;

  StandardTableau(SkewShape shape, std::vector<std::vector<int>> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {
    detail::check_entry_grid(shape_, entries_);
    const long long n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : entries_)
      for (int v : row) {
        if (v < 1 || v > n) throw std::invalid_argument("StandardTableau: entry out of range");
        if (seen[static_cast<std::size_t>(v)])
          throw std::invalid_argument("StandardTableau: repeated entry");
        seen[static_cast<std::size_t>(v)] = true;
      }
    for (int r = 0; r < num_rows(); ++r)
      for (int c = shape_.inner().row_or_zero(r); c < shape_.outer().rows()[static_cast<std::size_t>(r)]; ++c) {
        if (c + 1 < shape_.outer().rows()[static_cast<std::size_t>(r)] && !shape_.inner().has_cell(r, c + 1) &&
            entry(r, c) >= entry(r, c + 1))
          throw std::invalid_argument("StandardTableau: row not strictly increasing");
        if (shape_.has_cell(r + 1, c) && entry(r, c) >= entry(r + 1, c))
          throw std::invalid_argument("StandardTableau: column not strictly increasing");
      }
  }

  // Straight-shape convenience: rows given in full, inner shape empty.
  explicit StandardTableau(std::vector<std::vector<int>> rows)
      : StandardTableau(make_straight(std::move(rows))) {}

  const SkewShape& shape() const { return shape_; }
  const YoungDiagram& outer() const { return shape_.outer(); }
  const YoungDiagram& inner() const { return shape_.inner(); }
  long long size() const { return shape_.size(); }
  int num_rows() const { return shape_.outer().num_rows(); }
  const std::vector<std::vector<int>>& entry_rows() const { return entries_; }

  int entry(int r, int c) const {
    if (!shape_.has_cell(r, c)) throw std::out_of_range("StandardTableau::entry: no such cell");
    return entries_[static_cast<std::size_t>(r)]
                   [static_cast<std::size_t>(c - shape_.inner().row_or_zero(r))];
  }

  // Shape formed by the inner diagram plus all cells with entry <= m
  // (an order ideal by standardness, hence a valid diagram).
  YoungDiagram prefix_shape(int m) const {
    std::vector<int> rows;
    for (int r = 0; r < num_rows(); ++r) {
      int len = shape_.inner().row_or_zero(r);
      const auto& row = entries_[static_cast<std::size_t>(r)];
      for (int v : row) {
        if (v <= m)
          ++len;
        else
          break;
      }
      rows.push_back(len);
    }
    return YoungDiagram(std::move(rows));
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  static SkewShape straight_shape(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
    return SkewShape(YoungDiagram(std::move(lens)), YoungDiagram());
  }
  static StandardTableau make_straight(std::vector<std::vector<int>> rows) {
    SkewShape shape = straight_shape(rows);
    return StandardTableau(std::move(shape), std::move(rows));
  }

  SkewShape shape_;
  std::vector<std::vector<int>> entries_;
};

// Skew-capable tableau with entries in 1..max_entry; rows weakly increase,
// columns strictly increase.
class SemistandardTableau {
 public:
  SemistandardTableau() : max_entry_(0) {}

  SemistandardTableau(SkewShape shape, int max_entry, std::vector<std::vector<int>> entries)
      : shape_(std::move(shape)), max_entry_(max_entry), entries_(std::move(entries)) {
    if (max_entry_ < 0) throw std::invalid_argument("SemistandardTableau: negative entry bound");
    detail::check_entry_grid(shape_, entries_);
    for (const auto& row : entries_)
      for (int v : row)
        if (v < 1 || v > max_entry_)
          throw std::invalid_argument("SemistandardTableau: entry out of range");
    for (int r = 0; r < num_rows(); ++r)
      for (int c = shape_.inner().row_or_zero(r); c < shape_.outer().rows()[static_cast<std::size_t>(r)]; ++c) {
        if (c + 1 < shape_.outer().rows()[static_cast<std::size_t>(r)] && !shape_.inner().has_cell(r, c + 1) &&
            entry(r, c) > entry(r, c + 1))
          throw std::invalid_argument("SemistandardTableau: row not weakly increasing");
        if (shape_.has_cell(r + 1, c) && entry(r, c) >= entry(r + 1, c))
          throw std::invalid_argument("SemistandardTableau: column not strictly increasing");
      }
  }

  SemistandardTableau(int max_entry, std::vector<std::vector<int>> rows)
      : SemistandardTableau(make_straight(max_entry, std::move(rows))) {}

  const SkewShape& shape() const { return shape_; }
  const YoungDiagram& outer() const { return shape_.outer(); }
  const YoungDiagram& inner() const { return shape_.inner(); }
  long long size() const { return shape_.size(); }
  int num_rows() const { return shape_.outer().num_rows(); }
  int max_entry() const { return max_entry_; }
  const std::vector<std::vector<int>>& entry_rows() const { return entries_; }

  int entry(int r, int c) const {
    if (!shape_.has_cell(r, c)) throw std::out_of_range("SemistandardTableau::entry: no such cell");
    return entries_[static_cast<std::size_t>(r)]
                   [static_cast<std::size_t>(c - shape_.inner().row_or_zero(r))];
  }

  YoungDiagram prefix_shape(int m) const {
    std::vector<int> rows;
    for (int r = 0; r < num_rows(); ++r) {
      int len = shape_.inner().row_or_zero(r);
      for (int v : entries_[static_cast<std::size_t>(r)]) {
        if (v <= m)
          ++len;
        else
          break;
      }
      rows.push_back(len);
    }
    return YoungDiagram(std::move(rows));
  }

  // Multiplicity of each value 1..max_entry.
  std::vector<long long> content() const {
    std::vector<long long> out(static_cast<std::size_t>(max_entry_), 0);
    for (const auto& row : entries_)
      for (int v : row) ++out[static_cast<std::size_t>(v - 1)];
    return out;
  }

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

 private:
  static SkewShape straight_shape(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
    return SkewShape(YoungDiagram(std::move(lens)), YoungDiagram());
  }
  static SemistandardTableau make_straight(int max_entry, std::vector<std::vector<int>> rows) {
    SkewShape shape = straight_shape(rows);
    return SemistandardTableau(std::move(shape), max_entry, std::move(rows));
  }

  SkewShape shape_;
  int max_entry_ = 0;
  std::vector<std::vector<int>> entries_;
};

}  // namespace rsproc
