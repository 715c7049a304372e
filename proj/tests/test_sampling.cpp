#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <catch2/catch_amalgamated.hpp>

#include "rsproc/arch.hpp"
#include "rsproc/rng.hpp"
#include "rsproc/samplers.hpp"

using namespace rsproc;

namespace {

// Pearson chi-square p-value of integer draws against a pmf on 0, 1, 2, ...
// Bins above `max_bin` are merged into a tail; bins with expected count below
// 5 are merged into their neighbour to keep the statistic well behaved.
double chi_square_pvalue(const std::vector<long long>& draws,
                         const std::function<double(int)>& pmf, int max_bin) {
  const double n = static_cast<double>(draws.size());
  std::vector<double> expected(static_cast<std::size_t>(max_bin) + 2, 0.0);
  double head = 0;
  for (int b = 0; b <= max_bin; ++b) {
    expected[static_cast<std::size_t>(b)] = n * pmf(b);
    head += pmf(b);
  }
  expected.back() = n * (1.0 - head);
  std::vector<double> observed(expected.size(), 0.0);
  for (long long d : draws) {
    const std::size_t b = d > max_bin ? expected.size() - 1 : static_cast<std::size_t>(d);
    observed[b] += 1;
  }
  // merge thin bins right-to-left so every kept bin has expectation >= 5
  for (std::size_t b = expected.size() - 1; b > 0; --b) {
    if (expected[b] < 5) {
      expected[b - 1] += expected[b];
      observed[b - 1] += observed[b];
      expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(b));
      observed.erase(observed.begin() + static_cast<std::ptrdiff_t>(b));
    }
  }
  REQUIRE(expected.size() >= 2);
  double stat = 0;
  for (std::size_t b = 0; b < expected.size(); ++b) {
    const double diff = observed[b] - expected[b];
    stat += diff * diff / expected[b];
  }
  const boost::math::chi_squared dist(static_cast<double>(expected.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double poisson_pmf(int n, double mean) {
  return std::exp(n * std::log(mean) - mean - std::lgamma(n + 1.0));
}

}  // namespace

TEST_CASE("generator reproduces the reference output vectors") {
  struct Vector {
    RngSpec spec;
    std::vector<std::uint64_t> raw;
    std::vector<double> unit;
  };
  const std::vector<Vector> vectors = {
      {{42, 54},
       {0x86b1da1d72062b68ull, 0x1304aa46c9853d39ull, 0xa3670e9e0dd50358ull,
        0xf9090e529a7dae00ull, 0xc85b9fd837996f2cull, 0x606121f8e3919196ull},
       {0.52615130633241647, 0.074289934427288595, 0.63829127653828621, 0.97279443279921074}},
      {{0, 0},
       {0xd4feb4e5a4bcfe09ull, 0xe85a7fe071b026e6ull, 0x3a5b9037fe928c11ull,
        0x7b044380d100f216ull, 0x1c7850a6b6d83e6aull, 0x240b82fcc04f0926ull},
       {0.83201151472598045, 0.90763091306297428, 0.2279596459107528, 0.48053380865986006}},
      {{9223372036854788153ull, 977},
       {0x3ed5d19005c9a3e3ull, 0xa2c6ae6c70dcf707ull, 0xb0fbf704fb8f668full,
        0x19b6db158c15faceull, 0x02953911b4db9002ull, 0xc37a44ea71c3bf48ull},
       {0.24545011297394703, 0.63584413669092377, 0.69134467956206214, 0.10044640804343163}}};
  for (const auto& v : vectors) {
    Pcg64 gen(v.spec);
    for (std::uint64_t expected : v.raw) CHECK(gen.next() == expected);
    Pcg64 fresh(v.spec);
    for (double expected : v.unit) CHECK(fresh.next_unit() == expected);
  }
}

TEST_CASE("equal specs reproduce draws and streams separate them") {
  Pcg64 a(7, 3);
  Pcg64 b(7, 3);
  Pcg64 c(7, 4);
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next();
    all_equal = all_equal && x == b.next();
    any_diff = any_diff || x != c.next();
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("unit draws stay in range with the right mean") {
  Pcg64 gen(11, 0);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = gen.next_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // 4 sigma for the mean of n uniforms, sigma = 1/sqrt(12)
  CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("exponential draws have unit mean") {
  Pcg64 gen(13, 0);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += gen.next_exponential();
  CHECK(std::abs(sum / n - 1.0) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("poisson draws match the counting law") {
  Pcg64 gen(17, 0);
  std::vector<long long> draws;
  for (int i = 0; i < 100000; ++i) draws.push_back(gen.next_poisson(3.5));
  CHECK(chi_square_pvalue(draws, [](int n) { return poisson_pmf(n, 3.5); }, 14) > 1e-3);

  CHECK(gen.next_poisson(0.0) == 0);
  CHECK_THROWS_AS(gen.next_poisson(-1.0), std::invalid_argument);

  // large mean: exponential sums do not underflow where products would
  double sum = 0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) sum += static_cast<double>(gen.next_poisson(900.0));
  CHECK(std::abs(sum / n - 900.0) < 4.0 * 30.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("geometric draws match the ratio law") {
  Pcg64 gen(19, 0);
  std::vector<long long> draws;
  for (int i = 0; i < 100000; ++i) draws.push_back(gen.next_geometric(0.25));
  CHECK(chi_square_pvalue(
            draws, [](int n) { return 0.75 * std::pow(0.25, n); }, 10) > 1e-3);
  CHECK_THROWS_AS(gen.next_geometric(0.0), std::invalid_argument);
  CHECK_THROWS_AS(gen.next_geometric(1.0), std::invalid_argument);
}

TEST_CASE("point field has the right count law and uniform coordinates") {
  const double theta = 1.2;
  Pcg64 gen(23, 0);
  std::vector<long long> counts;
  double coord_sum = 0;
  long long coord_n = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto config = sample_poisson_square(theta, gen);
    counts.push_back(static_cast<long long>(config.points().size()));
    for (const auto& p : config.points()) {
      REQUIRE(p.x >= 0.0);
      REQUIRE(p.x <= theta);
      REQUIRE(p.y >= 0.0);
      REQUIRE(p.y <= theta);
      coord_sum += p.x + p.y;
      coord_n += 2;
    }
  }
  const double mean = theta * theta;
  CHECK(chi_square_pvalue(
            counts, [&](int n) { return poisson_pmf(n, mean); }, 10) > 1e-3);
  const double sigma = theta / std::sqrt(12.0);
  CHECK(std::abs(coord_sum / static_cast<double>(coord_n) - theta / 2) <
        4 * sigma / std::sqrt(static_cast<double>(coord_n)));
  CHECK_THROWS_AS(sample_poisson_square(0.0, gen), std::invalid_argument);
}

TEST_CASE("lattice counts are geometric and uniform over compositions given the total") {
  const double theta = 1.0;
  const int k = 2;
  const double ratio = 0.25;  // (theta / k)^2
  Pcg64 gen(29, 0);
  std::vector<long long> cells;
  std::map<std::array<long long, 4>, long long> comps_of_two;
  long long accepted = 0;
  for (int i = 0; i < 60000; ++i) {
    const auto config = sample_geometric_lattice(theta, k, gen);
    const auto& c = config.counts();
    for (const auto& row : c)
      for (long long v : row) cells.push_back(v);
    if (config.total() == 2) {
      ++accepted;
      comps_of_two[{c[0][0], c[0][1], c[1][0], c[1][1]}] += 1;
    }
  }
  CHECK(chi_square_pvalue(
            cells, [&](int n) { return (1 - ratio) * std::pow(ratio, n); }, 12) > 1e-3);

  // conditioned on total 2 the ten compositions are equally likely
  REQUIRE(comps_of_two.size() == 10);
  double stat = 0;
  const double expected = static_cast<double>(accepted) / 10.0;
  for (const auto& [comp, observed] : comps_of_two) {
    const double diff = static_cast<double>(observed) - expected;
    stat += diff * diff / expected;
  }
  const boost::math::chi_squared dist(9);
  CHECK(boost::math::cdf(boost::math::complement(dist, stat)) > 1e-3);

  CHECK_THROWS_AS(sample_geometric_lattice(2.0, 2, gen), std::invalid_argument);
  CHECK_THROWS_AS(sample_geometric_lattice(1.0, 0, gen), std::invalid_argument);
}

TEST_CASE("arch move-count law matches its series") {
  const double theta = 0.8;
  const ArchJumpLaw law(theta);
  const auto& probs = law.probabilities();
  REQUIRE(probs.size() >= 5);

  double total = 0;
  for (double p : probs) total += p;
  CHECK(total == Catch::Approx(1.0).epsilon(1e-12));

  // successive weights drop by (theta / (n + 1))^2
  for (std::size_t n = 0; n + 1 < std::min<std::size_t>(probs.size(), 8); ++n) {
    const double expected = std::pow(theta / static_cast<double>(n + 1), 2.0);
    CHECK(probs[n + 1] / probs[n] == Catch::Approx(expected).epsilon(1e-10));
  }

  // the normalizer is the order-zero modified Bessel value at 2 theta
  CHECK(probs[0] == Catch::Approx(1.0 / boost::math::cyl_bessel_i(0, 2 * theta)).epsilon(1e-12));

  Pcg64 gen(31, 0);
  std::vector<long long> draws;
  for (int i = 0; i < 100000; ++i) draws.push_back(law.sample(gen));
  CHECK(chi_square_pvalue(
            draws,
            [&](int n) {
              return n < static_cast<int>(probs.size()) ? probs[static_cast<std::size_t>(n)] : 0.0;
            },
            8) > 1e-3);

  // large parameter: the log-space table stays normalized
  const ArchJumpLaw wide(100.0);
  double wide_total = 0;
  for (double p : wide.probabilities()) wide_total += p;
  CHECK(wide_total == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("arch path values move up then down around the window") {
  const ArchPath arch{1.0, 5, {-0.8, -0.3}, {0.2, 0.6}};
  CHECK(arch.value_at(-1.0) == 5);
  CHECK(arch.value_at(-0.9) == 5);
  CHECK(arch.value_at(-0.8) == 6);  // up move counts at its time
  CHECK(arch.value_at(-0.5) == 6);
  CHECK(arch.value_at(-0.3) == 7);
  CHECK(arch.value_at(0.0) == 7);
  CHECK(arch.value_at(0.2) == 7);  // down move counts just after its time
  CHECK(arch.value_at(0.2000001) == 6);
  CHECK(arch.value_at(0.6) == 6);
  CHECK(arch.value_at(0.6000001) == 5);
  CHECK(arch.value_at(1.0) == 5);
  CHECK_THROWS_AS(arch.value_at(1.5), std::invalid_argument);

  Pcg64 gen(37, 0);
  const ArchJumpLaw law(1.3);
  for (int i = 0; i < 200; ++i) {
    const auto sampled = sample_arch(law, -2, gen);
    REQUIRE(sampled.up_times.size() == sampled.down_times.size());
    CHECK(sampled.value_at(-1.3) == -2);
    CHECK(sampled.value_at(1.3) == -2);
    CHECK(sampled.value_at(0.0) ==
          -2 + static_cast<long long>(sampled.up_times.size()));
    CHECK(std::is_sorted(sampled.up_times.begin(), sampled.up_times.end()));
    CHECK(std::is_sorted(sampled.down_times.begin(), sampled.down_times.end()));
    for (double t : sampled.up_times) {
      CHECK(t >= -1.3);
      CHECK(t < 0);
    }
    for (double t : sampled.down_times) {
      CHECK(t >= 0);
      CHECK(t < 1.3);
    }
  }
}

TEST_CASE("ordering check separates touching and ordered ensembles") {
  const ArchPath high{1.0, 1, {-0.5}, {0.5}};
  const ArchPath low{1.0, 0, {-0.4}, {0.45}};
  CHECK(arches_strictly_ordered({high, low}));
  // the lower arch catches up on [-0.4, -0.3): 1 vs 2 is fine, but a second
  // up move pushes it level with the upper path
  const ArchPath clash{1.0, 0, {-0.4, -0.35}, {0.55, 0.6}};
  CHECK_FALSE(arches_strictly_ordered({high, clash}));
  CHECK(arches_strictly_ordered({high}));
}

TEST_CASE("nonintersecting ensembles are ordered, anchored, and reproducible") {
  const RngSpec spec{101, 7};
  const auto ensemble = sample_nonintersecting_arches(0.6, 3, spec);
  REQUIRE(ensemble.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(ensemble[static_cast<std::size_t>(i)].initial == -i);
  CHECK(arches_strictly_ordered(ensemble));
  CHECK(sample_nonintersecting_arches(0.6, 3, spec) == ensemble);

  Pcg64 gen(103, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sampled = sample_nonintersecting_arches(0.7, 2, gen);
    CHECK(arches_strictly_ordered(sampled));
  }
  CHECK_THROWS_AS(sample_nonintersecting_arches(0.6, 0, gen), std::invalid_argument);
}
