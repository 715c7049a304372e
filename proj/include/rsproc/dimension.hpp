#pragma once

#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "rsproc/bigint.hpp"
#include "rsproc/partition.hpp"

namespace rsproc {

// Number of standard fillings of a straight shape: n! / product of hook lengths.
inline BigInt dim_standard(const YoungDiagram& shape) {
  const auto conj = shape.conjugate();
  BigInt hooks = 1;
  for (int r = 0; r < shape.num_rows(); ++r)
    for (int c = 0; c < shape.rows()[static_cast<std::size_t>(r)]; ++c) {
      const int arm = shape.rows()[static_cast<std::size_t>(r)] - c - 1;
      const int leg = conj.rows()[static_cast<std::size_t>(c)] - r - 1;
      hooks *= (arm + leg + 1);
    }
  return factorial(static_cast<int>(shape.size())) / hooks;
}

namespace detail {

// Determinant formula for skew standard fillings:
//   |shape|! * det( 1 / (outer_i - inner_j - i + j)! ),  1/(negative)! = 0.
inline BigInt dim_skew_standard_uncached(const SkewShape& shape) {
  const int m = shape.outer().num_rows();
  if (m == 0) return 1;
  std::vector<std::vector<BigRat>> mat(static_cast<std::size_t>(m),
                                       std::vector<BigRat>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int a = shape.outer().rows()[static_cast<std::size_t>(i)] -
                    shape.inner().row_or_zero(j) - i + j;
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          a < 0 ? BigRat(0) : BigRat(1) / factorial(a);
    }
  const BigRat det = det_rational(std::move(mat));
  const BigRat result = det * factorial(static_cast<int>(shape.size()));
  if (denominator(result) != 1)
    throw std::logic_error("dim_skew_standard: non-integral determinant");
  return numerator(result);
}

}  // namespace detail

// Cached wrapper: the finite-dimensional evaluators hit the same skew shapes
// repeatedly and from several worker threads.
inline BigInt dim_skew_standard(const SkewShape& shape) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> cache;
  static std::shared_mutex mu;
  const auto key = std::make_pair(shape.outer().rows(), shape.inner().rows());
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt value = detail::dim_skew_standard_uncached(shape);
  std::unique_lock lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

namespace detail {

// Complete homogeneous basis count for k variables: h_n(1^k) = C(n + k - 1, n).
inline BigInt h_count(int n, int k) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  if (k <= 0) return 0;
  return binomial(BigInt(n) + k - 1, n);
}

}  // namespace detail

// Number of semistandard fillings of a skew shape with entries bounded by k:
//   det( h_{outer_i - inner_j - i + j}(1^k) ).
inline BigInt count_ssyt(const SkewShape& shape, int k) {
  if (k < 0) throw std::invalid_argument("count_ssyt: negative entry bound");
  if (k == 0) {
    if (shape.size() > 0)
      throw std::invalid_argument("count_ssyt: entry bound 0 with nonempty shape");
    return 1;
  }
  const int m = shape.outer().num_rows();
  if (m == 0) return 1;
  std::vector<std::vector<BigRat>> mat(static_cast<std::size_t>(m),
                                       std::vector<BigRat>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          BigRat(detail::h_count(shape.outer().rows()[static_cast<std::size_t>(i)] -
                                     shape.inner().row_or_zero(j) - i + j,
                                 k));
  const BigRat det = det_rational(std::move(mat));
  if (denominator(det) != 1) throw std::logic_error("count_ssyt: non-integral determinant");
  return numerator(det);
}

}  // namespace rsproc
