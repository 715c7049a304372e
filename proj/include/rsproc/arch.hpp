#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rsproc/rng.hpp"

namespace rsproc {

// Piecewise-constant up/down excursion on [-theta, theta]: starts at
// `initial`, moves up by one at each time in `up_times` (all in [-theta, 0)),
// down by one at each time in `down_times` (all in [0, theta]), and returns to
// `initial` at the right endpoint. Up moves take effect at their time, down
// moves just after, matching the diagram-path convention that a value
// persists through its drop time.
struct ArchPath {
  double theta = 1;
  long long initial = 0;
  std::vector<double> up_times;    // sorted
  std::vector<double> down_times;  // sorted, same length as up_times

  long long value_at(double t) const {
    if (!(std::abs(t) <= theta))
      throw std::invalid_argument("ArchPath::value_at: time outside [-theta, theta]");
    const auto ups = std::upper_bound(up_times.begin(), up_times.end(), t) - up_times.begin();
    const auto downs =
        std::lower_bound(down_times.begin(), down_times.end(), t) - down_times.begin();
    return initial + static_cast<long long>(ups) - static_cast<long long>(downs);
  }

  friend bool operator==(const ArchPath&, const ArchPath&) = default;
};

// Law of the number of up (equivalently down) moves of a single arch:
// P(n) proportional to (theta^n / n!)^2. Weights are tabulated in log space
// and truncated once they fall 60 nats below the peak.
class ArchJumpLaw {
 public:
  explicit ArchJumpLaw(double theta) : theta_(theta) {
    if (!(theta > 0)) throw std::invalid_argument("ArchJumpLaw: theta must be positive");
    std::vector<double> log_weights;
    double peak = -std::numeric_limits<double>::infinity();
    for (int n = 0;; ++n) {
      const double lw = 2 * (n * std::log(theta) - std::lgamma(n + 1.0));
      log_weights.push_back(lw);
      peak = std::max(peak, lw);
      if (n > theta && lw < peak - 60) break;
    }
    double total = 0;
    probabilities_.reserve(log_weights.size());
    for (double lw : log_weights) {
      probabilities_.push_back(std::exp(lw - peak));
      total += probabilities_.back();
    }
    for (double& p : probabilities_) p /= total;
  }

  double theta() const { return theta_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  long long sample(Pcg64& gen) const {
    const double u = gen.next_unit();
    double acc = 0;
    for (std::size_t n = 0; n < probabilities_.size(); ++n) {
      acc += probabilities_[n];
      if (u < acc) return static_cast<long long>(n);
    }
    return static_cast<long long>(probabilities_.size()) - 1;
  }

 private:
  double theta_ = 1;
  std::vector<double> probabilities_;
};

// One arch: conditioned move count, then independent sorted uniform times on
// each half of the window.
inline ArchPath sample_arch(const ArchJumpLaw& law, long long initial, Pcg64& gen) {
  const double theta = law.theta();
  const long long n = law.sample(gen);
  ArchPath arch{theta, initial, {}, {}};
  arch.up_times.reserve(static_cast<std::size_t>(n));
  arch.down_times.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    arch.up_times.push_back(theta * gen.next_unit() - theta);
    arch.down_times.push_back(theta * gen.next_unit());
  }
  std::sort(arch.up_times.begin(), arch.up_times.end());
  std::sort(arch.down_times.begin(), arch.down_times.end());
  return arch;
}

inline ArchPath sample_arch(double theta, long long initial, const RngSpec& spec) {
  Pcg64 gen(spec);
  const ArchJumpLaw law(theta);
  return sample_arch(law, initial, gen);
}

// Strict ordering arches[0] > arches[1] > ... at every time, checked at all
// move times and at midpoints of consecutive move times (the paths are
// constant between moves, so these probes cover the whole window).
inline bool arches_strictly_ordered(const std::vector<ArchPath>& arches) {
  if (arches.size() < 2) return true;
  const double theta = arches.front().theta;
  std::vector<double> times{-theta, theta};
  for (const auto& arch : arches) {
    times.insert(times.end(), arch.up_times.begin(), arch.up_times.end());
    times.insert(times.end(), arch.down_times.begin(), arch.down_times.end());
  }
  std::sort(times.begin(), times.end());
  std::vector<double> probes = times;
  for (std::size_t i = 1; i < times.size(); ++i)
    probes.push_back(0.5 * (times[i - 1] + times[i]));
  for (double t : probes)
    for (std::size_t i = 1; i < arches.size(); ++i)
      if (!(arches[i - 1].value_at(t) > arches[i].value_at(t))) return false;
  return true;
}

// Ensemble of `count` independent arches started at 0, -1, ..., 1 - count,
// conditioned on never touching, by rejection. Throws if no ensemble is
// accepted within max_attempts draws.
inline std::vector<ArchPath> sample_nonintersecting_arches(double theta, int count, Pcg64& gen,
                                                           long long max_attempts = 10'000'000) {
  if (count < 1)
    throw std::invalid_argument("sample_nonintersecting_arches: count must be at least 1");
  const ArchJumpLaw law(theta);
  for (long long attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<ArchPath> arches;
    arches.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) arches.push_back(sample_arch(law, 1 - i, gen));
    if (arches_strictly_ordered(arches)) return arches;
  }
  throw std::runtime_error("sample_nonintersecting_arches: rejection budget exhausted");
}

inline std::vector<ArchPath> sample_nonintersecting_arches(double theta, int count,
                                                           const RngSpec& spec,
                                                           long long max_attempts = 10'000'000) {
  Pcg64 gen(spec);
  return sample_nonintersecting_arches(theta, count, gen, max_attempts);
}

}  // namespace rsproc
