#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace rsproc {

// Seed plus stream id. Equal specs reproduce the same draws; distinct streams
// give statistically independent sequences, so batch jobs can hand stream
// (base + sample index) to each sample and stay independent of thread count.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  friend bool operator==(const RngSpec&, const RngSpec&) = default;
};

// PCG64 (XSL-RR 128/64) with the standard 128-bit multiplier and the stream
// id folded into the odd increment. Output matches the widely used C
// implementation: advance the LCG, then xor-fold and rotate the new state.
class Pcg64 {
 public:
  using result_type = std::uint64_t;

  explicit Pcg64(const RngSpec& spec) : Pcg64(spec.seed, spec.stream) {}

  Pcg64(std::uint64_t seed, std::uint64_t stream) {
    inc_ = (static_cast<unsigned __int128>(stream) << 1) | 1u;
    state_ = 0;
    step();
    state_ += seed;
    step();
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return std::numeric_limits<std::uint64_t>::max(); }

  std::uint64_t next() {
    step();
    const std::uint64_t xored =
        static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
    const int rot = static_cast<int>(state_ >> 122);
    return (xored >> rot) | (xored << (-rot & 63));
  }

  std::uint64_t operator()() { return next(); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Exponential with rate 1.
  double next_exponential() { return -std::log1p(-next_unit()); }

  // Poisson via the exponential-sum method: the count of unit-rate arrivals
  // in [0, mean]. Linear in the mean but safe for large means where the
  // multiplicative method underflows.
  long long next_poisson(double mean) {
    if (!(mean >= 0)) throw std::invalid_argument("next_poisson: mean must be nonnegative");
    long long n = -1;
    double sum = 0;
    while (sum <= mean) {
      sum += next_exponential();
      ++n;
    }
    return n;
  }

  // Geometric with P(X = x) = (1 - ratio) * ratio^x for x >= 0, by inversion.
  long long next_geometric(double ratio) {
    if (!(ratio > 0 && ratio < 1))
      throw std::invalid_argument("next_geometric: ratio must lie in (0, 1)");
    return static_cast<long long>(std::floor(std::log1p(-next_unit()) / std::log(ratio)));
  }

 private:
  static constexpr unsigned __int128 kMult =
      (static_cast<unsigned __int128>(0x2360ED051FC65DA4ull) << 64) | 0x4385DF649FCCF645ull;

  void step() { state_ = state_ * kMult + inc_; }

  unsigned __int128 state_ = 0;
  unsigned __int128 inc_ = 1;
};

}  // namespace rsproc
