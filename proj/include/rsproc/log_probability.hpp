#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "rsproc/bigint.hpp"

namespace rsproc {

// Exact shadow of a probability: the value coefficient * exp(exponent), both
// parts rational. Continuous laws carry exponent -theta^2; discrete laws are
// purely rational (exponent 0).
struct ExactValue {
  BigRat coefficient;
  BigRat exponent;
  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

// Probability on the natural-log scale with an optional exact-rational shadow.
// The shadow, when present, matches the log form to 12 significant digits
// (asserted where values are produced).
struct LogProbability {
  double log_value = -std::numeric_limits<double>::infinity();
  std::optional<ExactValue> exact;

  double probability() const { return std::exp(log_value); }

  bool has_exact() const { return exact.has_value(); }
  BigInt exact_numerator() const { return numerator(require_exact().coefficient); }
  BigInt exact_denominator() const { return denominator(require_exact().coefficient); }
  const BigRat& exact_exponent() const { return require_exact().exponent; }

 private:
  const ExactValue& require_exact() const {
    if (!exact) throw std::logic_error("LogProbability: no exact value attached");
    return *exact;
  }
};

// Builds the pair (log form, exact form) from exact parts, evaluating the log
// in double precision. A zero coefficient maps to log 0 = -infinity.
inline LogProbability log_probability_from_exact(BigRat coefficient, BigRat exponent) {
  if (coefficient < 0)
    throw std::invalid_argument("log_probability_from_exact: negative coefficient");
  LogProbability result;
  if (coefficient != 0)
    result.log_value = log_rat(coefficient) + static_cast<double>(exponent);
  result.exact = ExactValue{std::move(coefficient), std::move(exponent)};
  return result;
}

}  // namespace rsproc
