#pragma once

#include <cmath>
#include <stdexcept>

#include "rsproc/bigint.hpp"
#include "rsproc/dimension.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/log_probability.hpp"
#include "rsproc/partition.hpp"
#include "rsproc/trajectory.hpp"

namespace rsproc {

// Value of the skew Schur function under the exponential specialization with
// parameter t: dim(shape) * t^size / size!.
inline double plancherel_schur(const SkewShape& shape, double t) {
  if (!(t >= 0)) throw std::invalid_argument("plancherel_schur: t must be nonnegative");
  const long long size = shape.size();
  const double log_dim = log_big(dim_skew_standard(shape));
  if (size == 0) return 1.0;
  if (t == 0) return 0.0;
  return std::exp(log_dim + static_cast<double>(size) * std::log(t) -
                  std::lgamma(static_cast<double>(size) + 1));
}

// Exact-rational form of the same value for rational t.
inline BigRat plancherel_schur_exact(const SkewShape& shape, const BigRat& t) {
  if (t < 0) throw std::invalid_argument("plancherel_schur_exact: t must be nonnegative");
  const long long size = shape.size();
  return BigRat(dim_skew_standard(shape)) * pow_rat(t, size) /
         BigRat(factorial(static_cast<int>(size)));
}

namespace detail {

// Squared-parameter core of the diagram weight e^{-s^2}(s^{|shape|} dim /
// |shape|!)^2, taking s^2 both as a double (log path) and as an exact
// rational.  Keeping the square avoids irrational parameters when the law is
// evaluated at sqrt-form parameters.
inline LogProbability poissonized_plancherel_sq(const YoungDiagram& shape, double s_sq,
                                                const BigRat& s_sq_exact) {
  const long long n = shape.size();
  const BigInt dim = dim_standard(shape);
  LogProbability result;
  if (s_sq == 0) {
    result.log_value = n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    result.exact = ExactValue{n == 0 ? BigRat(1) : BigRat(0), BigRat(0)};
    return result;
  }
  result.log_value = -s_sq + static_cast<double>(n) * std::log(s_sq) +
                     2 * (log_big(dim) - std::lgamma(static_cast<double>(n) + 1));
  BigRat coefficient = pow_rat(s_sq_exact, n) * BigRat(dim) * BigRat(dim) /
                       (BigRat(factorial(static_cast<int>(n))) * BigRat(factorial(static_cast<int>(n))));
  result.exact = ExactValue{std::move(coefficient), -s_sq_exact};
  return result;
}

}  // namespace detail

// Weight of a diagram under the square-window point process at full view:
// e^{-theta^2} (theta^{|shape|} dim(shape) / |shape|!)^2. Parameter 0 is the
// point mass at the empty diagram.
inline LogProbability poissonized_plancherel(const YoungDiagram& shape, double theta) {
  if (!(theta >= 0))
    throw std::invalid_argument("poissonized_plancherel: theta must be nonnegative");
  const BigRat theta_exact = rat_from_double(theta);
  return detail::poissonized_plancherel_sq(shape, theta * theta, theta_exact * theta_exact);
}

// Finite-alphabet skew Schur value of the lattice specialization on the
// interval (x, y]: (theta/k)^size * count_ssyt(shape, L) where L is the
// number of lattice sites j*theta/k inside the interval.
inline double finite_length_schur(const SkewShape& shape, double theta, int k, double x,
                                  double y) {
  if (!(theta > 0)) throw std::invalid_argument("finite_length_schur: theta must be positive");
  if (k < 1) throw std::invalid_argument("finite_length_schur: k must be at least 1");
  const long long size = shape.size();
  const int count = lattice_count_between(theta, k, x, y);
  if (count == 0) return size == 0 ? 1.0 : 0.0;
  const BigInt fillings = count_ssyt(shape, count);
  if (fillings == 0) return 0.0;
  return std::exp(static_cast<double>(size) * std::log(theta / k) + log_big(fillings));
}

// Power sums of the lattice specialization next to their limiting
// exponential-specialization values: the first component is
// L^{rows} (theta/k)^{size}, the second is (y-x)^n for a single column 1^n
// and 0 for any other nonempty partition.
inline std::pair<double, double> power_sum_diagnostic(const YoungDiagram& partition, double theta,
                                                      int k, double x, double y) {
  if (!(theta > 0)) throw std::invalid_argument("power_sum_diagnostic: theta must be positive");
  if (k < 1) throw std::invalid_argument("power_sum_diagnostic: k must be at least 1");
  const int count = lattice_count_between(theta, k, x, y);
  const double lattice_value =
      std::pow(static_cast<double>(count), partition.num_rows()) *
      std::pow(theta / k, static_cast<double>(partition.size()));
  const bool single_column =
      partition.num_rows() == 0 || partition.rows().front() == 1;
  const double limit_value =
      single_column ? std::pow(y - x, static_cast<double>(partition.num_rows())) : 0.0;
  return {lattice_value, limit_value};
}

}  // namespace rsproc
