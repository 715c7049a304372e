#pragma once

#include <stdexcept>
#include <vector>

#include "rsproc/lattice.hpp"
#include "rsproc/point_config.hpp"
#include "rsproc/rng.hpp"

namespace rsproc {

// Uniform Poisson point field on [0, theta]^2: a Poisson(theta^2) number of
// independent uniform points. Configurations require distinct x's and y's, so
// the measure-zero collision case is resampled wholesale.
inline PointConfiguration sample_poisson_square(double theta, Pcg64& gen) {
  if (!(theta > 0)) throw std::invalid_argument("sample_poisson_square: theta must be positive");
  for (int attempt = 0; attempt < 100; ++attempt) {
    const long long n = gen.next_poisson(theta * theta);
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
      const double x = theta * gen.next_unit();
      const double y = theta * gen.next_unit();
      points.push_back({x, y});
    }
    try {
      return PointConfiguration(theta, std::move(points));
    } catch (const std::invalid_argument&) {
      // coordinate collision; draw a fresh configuration
    }
  }
  throw std::runtime_error("sample_poisson_square: repeated coordinate collisions");
}

inline PointConfiguration sample_poisson_square(double theta, const RngSpec& spec) {
  Pcg64 gen(spec);
  return sample_poisson_square(theta, gen);
}

// Independent geometric counts with ratio p = (theta/k)^2 on the k x k grid,
// the discrete counterpart of the Poisson field. Needs theta < k so p < 1.
inline LatticeConfiguration sample_geometric_lattice(double theta, int k, Pcg64& gen) {
  if (!(theta > 0)) throw std::invalid_argument("sample_geometric_lattice: theta must be positive");
  if (k < 1) throw std::invalid_argument("sample_geometric_lattice: k must be at least 1");
  if (!(theta < k))
    throw std::invalid_argument("sample_geometric_lattice: need theta < k for a finite law");
  const double ratio = (theta / k) * (theta / k);
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(k),
                                             std::vector<long long>(static_cast<std::size_t>(k)));
  for (auto& row : counts)
    for (auto& value : row) value = gen.next_geometric(ratio);
  return LatticeConfiguration(theta, k, std::move(counts));
}

inline LatticeConfiguration sample_geometric_lattice(double theta, int k, const RngSpec& spec) {
  Pcg64 gen(spec);
  return sample_geometric_lattice(theta, k, gen);
}

}  // namespace rsproc
