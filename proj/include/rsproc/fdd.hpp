#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsproc/bigint.hpp"
#include "rsproc/dimension.hpp"
#include "rsproc/log_probability.hpp"
#include "rsproc/partition.hpp"
#include "rsproc/speclaw.hpp"
#include "rsproc/trajectory.hpp"

namespace rsproc {

struct Pin {
  double time = 0;
  YoungDiagram diagram;
  friend bool operator==(const Pin&, const Pin&) = default;
};

// A finite-dimensional query on the diagram path: the diagram is pinned at
// each listed time. A pin at time 0 is required; pins grow up to time 0 and
// shrink after it, so every pinned diagram is contained in the center pin.
// discrete_k switches evaluation to the lattice model with k levels.
class FddQuery {
 public:
  FddQuery(double theta, std::vector<Pin> pins, std::optional<int> discrete_k = std::nullopt)
      : theta_(theta), pins_(std::move(pins)), discrete_k_(discrete_k) {
    if (!(theta_ > 0)) throw std::invalid_argument("FddQuery: theta must be positive");
    if (pins_.empty()) throw std::invalid_argument("FddQuery: at least one pin is required");
    if (discrete_k_ && *discrete_k_ < 1)
      throw std::invalid_argument("FddQuery: discrete_k must be at least 1");
    bool has_center = false;
    for (std::size_t i = 0; i < pins_.size(); ++i) {
      if (!(std::abs(pins_[i].time) <= theta_))
        throw std::invalid_argument("FddQuery: pin time outside [-theta, theta]");
      if (pins_[i].time == 0.0) has_center = true;
      if (i > 0 && !(pins_[i - 1].time < pins_[i].time))
        throw std::invalid_argument("FddQuery: pin times must strictly increase");
    }
    if (!has_center) throw std::invalid_argument("FddQuery: a pin at time 0 is required");
    for (std::size_t i = 1; i < pins_.size(); ++i) {
      const Pin& a = pins_[i - 1];
      const Pin& b = pins_[i];
      const bool ok = b.time <= 0 ? b.diagram.contains(a.diagram) : a.diagram.contains(b.diagram);
      if (!ok) throw std::invalid_argument("FddQuery: containment violated between pins");
    }
  }

  double theta() const { return theta_; }
  const std::vector<Pin>& pins() const { return pins_; }
  const std::optional<int>& discrete_k() const { return discrete_k_; }

 private:
  double theta_ = 1;
  std::vector<Pin> pins_;
  std::optional<int> discrete_k_;
};

namespace detail {

// One factor chain of an FDD evaluation: consecutive (time, diagram) steps on
// one side of zero, boundary conventions already applied.
struct ChainStep {
  double from_time = 0;
  double to_time = 0;
  SkewShape skew;  // growing: later/earlier; shrinking: earlier/later
};

// Builds both factor chains of a query: the growing side from (-theta, empty)
// through the negative pins to (0, center), and the shrinking side from
// (0, center) through the positive pins to (theta, empty). Pins exactly at
// -theta or theta with empty diagrams restate the boundary convention and are
// dropped; nonempty ones force probability zero (signalled via the flag).
struct ChainSplit {
  std::vector<ChainStep> steps;
  bool impossible_boundary = false;
};

inline ChainSplit split_chains(const FddQuery& query) {
  const double theta = query.theta();
  ChainSplit split;
  std::vector<Pin> grow{{-theta, YoungDiagram()}};
  std::vector<Pin> shrink;
  for (const Pin& pin : query.pins()) {
    if (pin.time == -theta || pin.time == theta) {
      if (pin.diagram.num_rows() > 0) split.impossible_boundary = true;
      continue;
    }
    (pin.time <= 0 ? grow : shrink).push_back(pin);
  }
  shrink.insert(shrink.begin(), {0.0, grow.back().diagram});
  shrink.push_back({theta, YoungDiagram()});
  for (std::size_t i = 1; i < grow.size(); ++i)
    split.steps.push_back({grow[i - 1].time, grow[i].time,
                           SkewShape(grow[i].diagram, grow[i - 1].diagram)});
  for (std::size_t j = 1; j < shrink.size(); ++j)
    split.steps.push_back({shrink[j - 1].time, shrink[j].time,
                           SkewShape(shrink[j - 1].diagram, shrink[j].diagram)});
  return split;
}

inline void check_forms_agree(double log_a, double log_b, const char* where) {
  if (std::abs(log_a - log_b) > 1e-12 * std::max(1.0, std::abs(log_a)))
    throw std::logic_error(std::string(where) + ": product forms disagree");
}

}  // namespace detail

// Probability that the continuous diagram path passes through every pin,
// evaluated as the boundary-weighted product of skew dimension factors. The
// equivalent product of exponential-specialization Schur values is evaluated
// alongside and the two forms are required to agree to 12 significant digits,
// as is the exact-rational shadow.
inline LogProbability fdd_continuous(const FddQuery& query) {
  if (query.discrete_k())
    throw std::invalid_argument("fdd_continuous: query targets the discrete model");
  const double theta = query.theta();
  const BigRat theta_exact = rat_from_double(theta);
  const auto split = detail::split_chains(query);
  if (split.impossible_boundary)
    return LogProbability{-std::numeric_limits<double>::infinity(),
                          ExactValue{BigRat(0), -theta_exact * theta_exact}};

  double log_value = -theta * theta;
  double log_schur_form = -theta * theta;
  BigRat coefficient(1);
  for (const auto& step : split.steps) {
    const long long cells = step.skew.size();
    const double width = step.to_time - step.from_time;
    const BigInt dim = dim_skew_standard(step.skew);
    log_value += log_big(dim) - std::lgamma(static_cast<double>(cells) + 1);
    if (cells > 0) log_value += static_cast<double>(cells) * std::log(width);
    log_schur_form += std::log(plancherel_schur(step.skew, width));
    const BigRat width_exact =
        rat_from_double(step.to_time) - rat_from_double(step.from_time);
    coefficient *= BigRat(dim) * pow_rat(width_exact, cells) /
                   BigRat(factorial(static_cast<int>(cells)));
  }
  detail::check_forms_agree(log_value, log_schur_form, "fdd_continuous");
  LogProbability result =
      log_probability_from_exact(std::move(coefficient), -theta_exact * theta_exact);
  detail::check_forms_agree(log_value, result.log_value, "fdd_continuous");
  result.log_value = log_value;
  return result;
}

// Single-time law of the continuous path: the diagram weight with squared
// parameter theta * (theta - |t|).
inline LogProbability marginal_continuous(const YoungDiagram& shape, double t, double theta) {
  if (!(theta > 0)) throw std::invalid_argument("marginal_continuous: theta must be positive");
  if (!(std::abs(t) <= theta))
    throw std::invalid_argument("marginal_continuous: time outside [-theta, theta]");
  const BigRat theta_exact = rat_from_double(theta);
  const BigRat t_exact = rat_from_double(std::abs(t));
  return detail::poissonized_plancherel_sq(shape, theta * (theta - std::abs(t)),
                                           theta_exact * (theta_exact - t_exact));
}

// Probability that the lattice diagram path passes through every pin:
// (1-p)^{k^2} p^{|center|} times one bounded-alphabet count per step, the
// alphabet being the number of lattice sites in the step's half-open window
// interval. The finite-length Schur product form is evaluated alongside and
// must agree to 12 significant digits. Exact rationals are attached for
// k <= 128, where the (1-p)^{k^2} power stays manageable.
inline LogProbability fdd_discrete(const FddQuery& query) {
  if (!query.discrete_k())
    throw std::invalid_argument("fdd_discrete: query lacks discrete_k");
  const int k = *query.discrete_k();
  const double theta = query.theta();
  if (!(theta < k)) throw std::invalid_argument("fdd_discrete: need theta < k");
  const bool want_exact = k <= 128;
  const BigRat p_exact = want_exact
                             ? pow_rat(rat_from_double(theta) / k, 2)
                             : BigRat(0);
  const double p = (theta / k) * (theta / k);

  const auto split = detail::split_chains(query);
  long long center_size = 0;
  for (const Pin& pin : query.pins())
    if (pin.time == 0.0) center_size = pin.diagram.size();

  const auto zero_probability = [&] {
    LogProbability zero;
    zero.log_value = -std::numeric_limits<double>::infinity();
    zero.exact = ExactValue{BigRat(0), BigRat(0)};
    return zero;
  };
  if (split.impossible_boundary) return zero_probability();

  const double base = k * static_cast<double>(k) * std::log1p(-p);
  double log_value = base + static_cast<double>(center_size) * std::log(p);
  double log_schur_form = base;
  BigRat coefficient = want_exact
                           ? pow_rat(1 - p_exact, static_cast<long long>(k) * k) *
                                 pow_rat(p_exact, center_size)
                           : BigRat(0);
  for (const auto& step : split.steps) {
    // the step covers the window interval (theta + from, theta + to] on the
    // growing side; on the shrinking side times s map to theta - s, flipping
    // the interval to (theta - to, theta - from]
    const bool growing = step.to_time <= 0;
    const double lo = growing ? theta + step.from_time : theta - step.to_time;
    const double hi = growing ? theta + step.to_time : theta - step.from_time;
    const int sites = lattice_count_between(theta, k, lo, hi);
    const BigInt fillings = sites == 0 ? BigInt(step.skew.size() == 0 ? 1 : 0)
                                       : count_ssyt(step.skew, sites);
    if (fillings == 0) return zero_probability();
    log_value += log_big(fillings);
    log_schur_form += std::log(finite_length_schur(step.skew, theta, k, lo, hi));
    if (want_exact) coefficient *= BigRat(fillings);
  }
  detail::check_forms_agree(log_value, log_schur_form, "fdd_discrete");
  LogProbability result;
  result.log_value = log_value;
  if (want_exact) {
    result = log_probability_from_exact(std::move(coefficient), BigRat(0));
    detail::check_forms_agree(log_value, result.log_value, "fdd_discrete");
    result.log_value = log_value;
  }
  return result;
}

}  // namespace rsproc
