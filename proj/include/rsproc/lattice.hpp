#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "rsproc/insertion.hpp"
#include "rsproc/tableau.hpp"

namespace rsproc {

// Nonnegative multiplicities on the k x k grid of lattice sites
// (a*theta/k, b*theta/k), a,b = 1..k; counts[a-1][b-1] is the multiplicity
// at x-index a, y-index b.
class LatticeConfiguration {
 public:
  LatticeConfiguration() = default;

  LatticeConfiguration(double theta, int k, std::vector<std::vector<long long>> counts)
      : theta_(theta), k_(k), counts_(std::move(counts)) {
    if (!(theta_ > 0)) throw std::invalid_argument("LatticeConfiguration: theta must be positive");
    if (k_ < 1) throw std::invalid_argument("LatticeConfiguration: k must be at least 1");
    if (counts_.size() != static_cast<std::size_t>(k_))
      throw std::invalid_argument("LatticeConfiguration: counts must be k x k");
    for (const auto& row : counts_) {
      if (row.size() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("LatticeConfiguration: counts must be k x k");
      for (long long v : row)
        if (v < 0) throw std::invalid_argument("LatticeConfiguration: negative multiplicity");
    }
  }

  double theta() const { return theta_; }
  int k() const { return k_; }
  const std::vector<std::vector<long long>>& counts() const { return counts_; }

  long long total() const {
    long long t = 0;
    for (const auto& row : counts_)
      for (long long v : row) t += v;
    return t;
  }

  friend bool operator==(const LatticeConfiguration&, const LatticeConfiguration&) = default;

 private:
  double theta_ = 1;
  int k_ = 1;
  std::vector<std::vector<long long>> counts_;
};

// Same-shape semistandard pair with a common entry bound.
class SemistandardPair {
 public:
  SemistandardPair() = default;

  SemistandardPair(SemistandardTableau left, SemistandardTableau right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (left_.outer() != right_.outer() || !left_.inner().empty() || !right_.inner().empty())
      throw std::invalid_argument("SemistandardPair: tableaux must share a straight shape");
    if (left_.max_entry() != right_.max_entry())
      throw std::invalid_argument("SemistandardPair: entry bounds must match");
  }

  const SemistandardTableau& left() const { return left_; }
  const SemistandardTableau& right() const { return right_; }
  int max_entry() const { return left_.max_entry(); }
  long long size() const { return left_.size(); }
  const YoungDiagram& shape() const { return left_.outer(); }

  friend bool operator==(const SemistandardPair&, const SemistandardPair&) = default;

 private:
  SemistandardTableau left_, right_;
};

// Matrix correspondence: read the multiplicity matrix in lexicographic
// (x-index, y-index) order, insert y-indices on the left, record x-indices on
// the right.
inline SemistandardPair rsk(const LatticeConfiguration& config) {
  std::vector<std::vector<int>> ins, rec;
  const int k = config.k();
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (long long m = 0; m < config.counts()[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; ++m) {
        const auto [r, c] = detail::bump_insert(ins, b);
        if (static_cast<std::size_t>(r) == rec.size()) rec.push_back({});
        rec[static_cast<std::size_t>(r)].push_back(a);
      }
  return SemistandardPair(SemistandardTableau(k, std::move(ins)),
                          SemistandardTableau(k, std::move(rec)));
}

// Inverse pass: repeatedly un-insert the cell recording the largest entry,
// rightmost first (that is the cell added last).
inline LatticeConfiguration rsk_inverse(const SemistandardPair& pair, double theta) {
  const int k = pair.max_entry();
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(k),
                                             std::vector<long long>(static_cast<std::size_t>(k), 0));
  std::vector<std::vector<int>> ins = pair.left().entry_rows();
  std::vector<std::vector<int>> rec = pair.right().entry_rows();
  for (long long remaining = pair.size(); remaining > 0; --remaining) {
    int best_r = -1, best_c = -1, a = 0;
    for (std::size_t r = 0; r < rec.size(); ++r) {
      if (rec[r].empty()) continue;
      const int v = rec[r].back();  // row maximum sits at the row end
      const int c = static_cast<int>(rec[r].size()) - 1;
      if (v > a || (v == a && c > best_c)) {
        a = v;
        best_r = static_cast<int>(r);
        best_c = c;
      }
    }
    rec[static_cast<std::size_t>(best_r)].pop_back();
    while (!rec.empty() && rec.back().empty()) rec.pop_back();
    const int b = detail::bump_remove(ins, best_r, best_c);
    ++counts[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  }
  return LatticeConfiguration(theta, k, std::move(counts));
}

}  // namespace rsproc
