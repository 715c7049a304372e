#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rsproc/decorated.hpp"
#include "rsproc/rng.hpp"
#include "rsproc/samplers.hpp"
#include "rsproc/trajectory.hpp"

namespace rsproc {

struct LlnRow {
  double tau = 0;      // relative time in (-1, 1)
  double ratio = 0;    // averaged top-line value at tau*theta, divided by theta
  double target = 0;   // first-order limit 2*sqrt(1-|tau|)
  friend bool operator==(const LlnRow&, const LlnRow&) = default;
};

// First-order scaling of the top line: averages M(1; tau*theta)/theta over a
// fixed set of seeded draws and tabulates it against the limiting profile
// 2*sqrt(1-|tau|). Draw d uses stream (base + d); the same draws serve every
// tau, so rows of one table are comparable.
inline std::vector<LlnRow> lln_topline(double theta, const std::vector<double>& taus,
                                       const RngSpec& rng, int draws = 20) {
  if (!(theta > 0)) throw std::invalid_argument("lln_topline: theta must be positive");
  if (draws < 1) throw std::invalid_argument("lln_topline: need at least one draw");
  for (double tau : taus)
    if (!(std::abs(tau) < 1)) throw std::invalid_argument("lln_topline: tau must be in (-1, 1)");

  std::vector<double> sums(taus.size(), 0.0);
  for (int d = 0; d < draws; ++d) {
    Pcg64 gen(rng.seed, rng.stream + static_cast<std::uint64_t>(d));
    const auto pair = drs(sample_poisson_square(theta, gen));
    for (std::size_t i = 0; i < taus.size(); ++i)
      sums[i] += static_cast<double>(diagram_at(pair, taus[i] * theta).row_or_zero(0));
  }

  std::vector<LlnRow> rows;
  rows.reserve(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i)
    rows.push_back({taus[i], sums[i] / (static_cast<double>(draws) * theta),
                    2.0 * std::sqrt(1.0 - std::abs(taus[i]))});
  return rows;
}

}  // namespace rsproc
