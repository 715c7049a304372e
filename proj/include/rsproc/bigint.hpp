#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace rsproc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// n! with a process-wide cache; safe for concurrent callers.
inline const BigInt& factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  static std::vector<BigInt> cache{1};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  return cache[n];
}

// C(n, k) for possibly huge n but small k: k-term product, exact.
inline BigInt binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

inline BigRat pow_rat(const BigRat& base, long long e) {
  if (e < 0) throw std::invalid_argument("pow_rat: negative exponent");
  BigRat acc = 1, b = base;
  for (long long m = e; m > 0; m >>= 1) {
    if (m & 1) acc *= b;
    b *= b;
  }
  return acc;
}

// Exact dyadic expansion of a finite double.
inline BigRat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
  return BigRat(x);
}

// log of a positive big integer, usable far beyond double range.
inline double log_big(const BigInt& n) {
  if (n <= 0) throw std::domain_error("log_big: non-positive argument");
  const unsigned bits = boost::multiprecision::msb(n);
  if (bits <= 900) return std::log(n.convert_to<double>());
  const unsigned shift = bits - 900;
  const double mant = BigInt(n >> shift).convert_to<double>();
  return std::log(mant) + static_cast<double>(shift) * std::log(2.0);
}

// log of a positive rational. Numerator and denominator are truncated under a
// shared power-of-two scaling before the ratio is formed, so values near 1
// with astronomically large terms (e.g. (1-p)^{k^2}) keep full precision
// instead of cancelling two huge logarithms.
inline double log_rat(const BigRat& r) {
  if (r <= 0) throw std::domain_error("log_rat: non-positive argument");
  const BigInt& num = numerator(r);
  const BigInt& den = denominator(r);
  const long long shift_num =
      std::max<long long>(0, static_cast<long long>(boost::multiprecision::msb(num)) - 900);
  const long long shift_den =
      std::max<long long>(0, static_cast<long long>(boost::multiprecision::msb(den)) - 900);
  const double mant_num = BigInt(num >> static_cast<unsigned>(shift_num)).convert_to<double>();
  const double mant_den = BigInt(den >> static_cast<unsigned>(shift_den)).convert_to<double>();
  return std::log(mant_num / mant_den) +
         static_cast<double>(shift_num - shift_den) * std::log(2.0);
}

// Exact determinant by fraction-free-ish Gaussian elimination over rationals.
inline BigRat det_rational(std::vector<std::vector<BigRat>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_rational: matrix not square");
  BigRat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const BigRat inv = BigRat(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const BigRat f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace rsproc
