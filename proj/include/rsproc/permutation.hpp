#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rsproc {

// One-line notation, values 1..n each exactly once.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    const int n = static_cast<int>(values_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
      if (v < 1 || v > n) throw std::invalid_argument("Permutation: value out of range");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("Permutation: repeated value");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& one_line() const { return values_; }

  // 1-based application.
  int apply(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Permutation::apply: index out of range");
    return values_[static_cast<std::size_t>(i - 1)];
  }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(apply(i) - 1)] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

}  // namespace rsproc
