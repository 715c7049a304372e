#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "rsproc/rng.hpp"

namespace rsproc {

// One Monte-Carlo verification: an empirical match frequency scored against a
// reference probability as a z-statistic. std_error is the Bernoulli plug-in
// sqrt(p(1-p)/n); no density smoothing anywhere. For two-sided comparisons the
// reference is the other side's empirical frequency and std_error the pooled
// two-proportion error (see make_two_sample_report).
struct VerificationReport {
  std::string name;
  long long samples = 0;
  double empirical = 0;
  double std_error = 0;
  double exact = 0;
  double z_score = 0;
  double threshold = 4.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string notes;
};

namespace detail {

// z with a guarded zero-variance branch: exact agreement scores 0, any
// discrepancy at zero standard error scores infinite.
inline double guarded_z(double difference, double std_error) {
  if (std_error > 0) return difference / std_error;
  return difference == 0 ? 0.0
                         : std::copysign(std::numeric_limits<double>::infinity(), difference);
}

}  // namespace detail

inline VerificationReport make_report(std::string name, long long matches, long long samples,
                                      double exact, const RngSpec& rng, double threshold = 4.0,
                                      std::string notes = {}) {
  if (samples <= 0) throw std::invalid_argument("make_report: samples must be positive");
  if (matches < 0 || matches > samples)
    throw std::invalid_argument("make_report: matches outside [0, samples]");
  VerificationReport report;
  report.name = std::move(name);
  report.samples = samples;
  report.empirical = static_cast<double>(matches) / static_cast<double>(samples);
  report.std_error =
      std::sqrt(report.empirical * (1.0 - report.empirical) / static_cast<double>(samples));
  report.exact = exact;
  report.z_score = detail::guarded_z(report.empirical - exact, report.std_error);
  report.threshold = threshold;
  report.pass = std::abs(report.z_score) <= threshold;
  report.seed = rng.seed;
  report.stream = rng.stream;
  report.notes = std::move(notes);
  return report;
}

// Pooled two-proportion comparison for two-sided Monte Carlo: `empirical`
// holds side A, `exact` holds side B's empirical frequency, and std_error is
// the pooled error sqrt(p(1-p)(1/n_a + 1/n_b)).
inline VerificationReport make_two_sample_report(std::string name, long long matches_a,
                                                 long long samples_a, long long matches_b,
                                                 long long samples_b, const RngSpec& rng,
                                                 double threshold = 4.0, std::string notes = {}) {
  if (samples_a <= 0 || samples_b <= 0)
    throw std::invalid_argument("make_two_sample_report: samples must be positive");
  if (matches_a < 0 || matches_a > samples_a || matches_b < 0 || matches_b > samples_b)
    throw std::invalid_argument("make_two_sample_report: matches outside [0, samples]");
  VerificationReport report;
  report.name = std::move(name);
  report.samples = samples_a + samples_b;
  report.empirical = static_cast<double>(matches_a) / static_cast<double>(samples_a);
  report.exact = static_cast<double>(matches_b) / static_cast<double>(samples_b);
  const double pooled = static_cast<double>(matches_a + matches_b) /
                        static_cast<double>(samples_a + samples_b);
  report.std_error = std::sqrt(pooled * (1.0 - pooled) *
                               (1.0 / static_cast<double>(samples_a) +
                                1.0 / static_cast<double>(samples_b)));
  report.z_score = detail::guarded_z(report.empirical - report.exact, report.std_error);
  report.threshold = threshold;
  report.pass = std::abs(report.z_score) <= threshold;
  report.seed = rng.seed;
  report.stream = rng.stream;
  report.notes = std::move(notes);
  return report;
}

}  // namespace rsproc
