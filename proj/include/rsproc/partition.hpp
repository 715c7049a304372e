#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsproc {

// Integer partition drawn as a left-justified diagram: rows_ weakly decreasing,
// strictly positive (trailing zeros are stripped on construction).
class YoungDiagram {
 public:
  YoungDiagram() = default;

  explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] <= 0) throw std::invalid_argument("YoungDiagram: row lengths must be positive");
      if (i > 0 && rows_[i] > rows_[i - 1])
        throw std::invalid_argument("YoungDiagram: row lengths must be weakly decreasing");
    }
  }

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  // Length of 0-based row i; 0 beyond the last row.
  int row_or_zero(int i) const {
    return (i >= 0 && i < num_rows()) ? rows_[static_cast<std::size_t>(i)] : 0;
  }

  long long size() const { return std::accumulate(rows_.begin(), rows_.end(), 0LL); }

  bool contains(const YoungDiagram& other) const {
    if (other.num_rows() > num_rows()) return false;
    for (int i = 0; i < other.num_rows(); ++i)
      if (other.rows_[i] > rows_[i]) return false;
    return true;
  }

  bool has_cell(int r, int c) const { return r >= 0 && c >= 0 && c < row_or_zero(r); }

  YoungDiagram conjugate() const {
    std::vector<int> cols(rows_.empty() ? 0 : static_cast<std::size_t>(rows_[0]), 0);
    for (int len : rows_)
      for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
    return YoungDiagram(std::move(cols));
  }

  // Cells (r, c) whose addition keeps the diagram shape; r may equal num_rows().
  std::vector<std::pair<int, int>> addable_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r <= num_rows(); ++r) {
      const int c = row_or_zero(r);
      if (r == 0 || c < row_or_zero(r - 1)) out.emplace_back(r, c);
    }
    return out;
  }

  // Cells (r, c) at the end of a row whose removal keeps the diagram shape.
  std::vector<std::pair<int, int>> removable_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < num_rows(); ++r)
      if (rows_[static_cast<std::size_t>(r)] > row_or_zero(r + 1))
        out.emplace_back(r, rows_[static_cast<std::size_t>(r)] - 1);
    return out;
  }

  YoungDiagram with_cell_added(int r) const {
    if (r < 0 || r > num_rows()) throw std::invalid_argument("with_cell_added: bad row");
    std::vector<int> next = rows_;
    if (r == num_rows())
      next.push_back(1);
    else
      ++next[static_cast<std::size_t>(r)];
    return YoungDiagram(std::move(next));
  }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> rows_;
};

// Pair outer/inner with inner contained in outer; the cells of outer not in inner.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(YoungDiagram outer, YoungDiagram inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
      throw std::invalid_argument("SkewShape: inner diagram not contained in outer");
  }

  const YoungDiagram& outer() const { return outer_; }
  const YoungDiagram& inner() const { return inner_; }
  long long size() const { return outer_.size() - inner_.size(); }
  bool has_cell(int r, int c) const { return outer_.has_cell(r, c) && !inner_.has_cell(r, c); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

  std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

 private:
  YoungDiagram outer_, inner_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.push_back(YoungDiagram(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

inline std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  detail::partitions_rec(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

inline std::vector<YoungDiagram> all_diagrams_up_to(int n) {
  std::vector<YoungDiagram> out;
  for (int m = 0; m <= n; ++m)
    for (auto& d : partitions_of(m)) out.push_back(std::move(d));
  return out;
}

// All diagrams contained in `outer`. Row lengths are assigned top-down, weakly
// decreasing and bounded by outer; every prefix is itself a valid subdiagram.
inline std::vector<YoungDiagram> sub_diagrams(const YoungDiagram& outer) {
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int row, int prev_len) -> void {
    out.push_back(YoungDiagram(prefix));
    if (row == outer.num_rows()) return;
    const int cap = std::min(outer.rows()[static_cast<std::size_t>(row)], prev_len);
    for (int len = 1; len <= cap; ++len) {
      prefix.push_back(len);
      self(self, row + 1, len);
      prefix.pop_back();
    }
  };
  rec(rec, 0, outer.empty() ? 0 : outer.rows()[0]);
  return out;
}

// All diagrams d with lo ⊆ d ⊆ hi.
inline std::vector<YoungDiagram> diagrams_between(const YoungDiagram& lo, const YoungDiagram& hi) {
  if (!hi.contains(lo)) throw std::invalid_argument("diagrams_between: bounds not nested");
  std::vector<YoungDiagram> out;
  for (const auto& d : sub_diagrams(hi))
    if (d.contains(lo)) out.push_back(d);
  return out;
}

}  // namespace rsproc
