#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rsproc/arch.hpp"
#include "rsproc/decorated.hpp"
#include "rsproc/fdd.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/report.hpp"
#include "rsproc/rng.hpp"
#include "rsproc/samplers.hpp"
#include "rsproc/trajectory.hpp"

namespace rsproc {

namespace detail {

// Runs per_sample(i, shard) for i = 0..samples-1, split into one contiguous
// index chunk per shard. Sample i always draws from stream (base + i) inside
// per_sample, and each shard owns its own counters, so any worker count
// reproduces the serial results exactly.
template <typename PerSample>
void run_sharded(long long samples, long long shards, PerSample&& per_sample) {
  if (samples <= 0) throw std::invalid_argument("run_sharded: samples must be positive");
  shards = std::clamp<long long>(shards, 1, samples);
  const long long chunk = (samples + shards - 1) / shards;
  if (shards == 1) {
    for (long long i = 0; i < samples; ++i) per_sample(i, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(shards));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
  for (long long s = 0; s < shards; ++s) {
    const long long lo = s * chunk;
    const long long hi = std::min(samples, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, s, &per_sample, &errors] {
      try {
        for (long long i = lo; i < hi; ++i) per_sample(i, static_cast<std::size_t>(s));
      } catch (...) {
        errors[static_cast<std::size_t>(s)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
}

inline long long shard_count(int threads) {
  return threads > 0 ? threads
                     : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

inline std::string describe_query(const FddQuery& query) {
  std::ostringstream out;
  if (query.discrete_k())
    out << "discrete k=" << *query.discrete_k() << " ";
  else
    out << "continuous ";
  out << "theta=" << query.theta() << " pins";
  for (const auto& pin : query.pins()) {
    out << " (" << pin.time << ":[";
    for (std::size_t i = 0; i < pin.diagram.rows().size(); ++i) {
      if (i) out << ",";
      out << pin.diagram.rows()[i];
    }
    out << "])";
  }
  return out.str();
}

}  // namespace detail

// Estimate several pin queries against one shared stream of sampled paths.
// All queries must address the same model (same theta; all continuous, or all
// discrete with the same k) so a single draw serves every query. Returns one
// report per query, in order, scored against the exact evaluator.
inline std::vector<VerificationReport> estimate_fdd_batch(const std::vector<FddQuery>& queries,
                                                          long long samples, const RngSpec& rng,
                                                          double threshold = 4.0,
                                                          int threads = 0) {
  if (queries.empty()) throw std::invalid_argument("estimate_fdd_batch: no queries");
  const double theta = queries.front().theta();
  const std::optional<int> k = queries.front().discrete_k();
  for (const auto& q : queries)
    if (q.theta() != theta || q.discrete_k() != k)
      throw std::invalid_argument("estimate_fdd_batch: queries must share theta and model");

  const long long shards = detail::shard_count(threads);
  std::vector<std::vector<long long>> matches_by_shard(
      static_cast<std::size_t>(shards), std::vector<long long>(queries.size(), 0));

  detail::run_sharded(samples, shards, [&](long long index, std::size_t shard) {
    Pcg64 gen(rng.seed, rng.stream + static_cast<std::uint64_t>(index));
    auto& slot = matches_by_shard[shard];
    const auto score = [&](const auto& pinned_diagram_at) {
      for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        bool match = true;
        for (const auto& pin : queries[qi].pins())
          if (pinned_diagram_at(pin.time) != pin.diagram) {
            match = false;
            break;
          }
        if (match) ++slot[qi];
      }
    };
    if (!k) {
      const auto pair = drs(sample_poisson_square(theta, gen));
      score([&](double t) { return diagram_at(pair, t); });
    } else {
      const auto pair = rsk(sample_geometric_lattice(theta, *k, gen));
      score([&](double t) { return discrete_diagram_at(pair, theta, *k, t); });
    }
  });

  std::vector<VerificationReport> reports;
  reports.reserve(queries.size());
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    long long matches = 0;
    for (const auto& slot : matches_by_shard) matches += slot[qi];
    const double exact =
        k ? fdd_discrete(queries[qi]).probability() : fdd_continuous(queries[qi]).probability();
    reports.push_back(make_report(detail::describe_query(queries[qi]), matches, samples, exact,
                                  rng, threshold));
  }
  return reports;
}

inline VerificationReport estimate_fdd(const FddQuery& query, long long samples,
                                       const RngSpec& rng, double threshold = 4.0,
                                       int threads = 0) {
  return estimate_fdd_batch({query}, samples, rng, threshold, threads).front();
}

// Two-sided Monte Carlo for the arch/line equality: the rejection-sampled
// non-intersecting arch ensemble against the point-field line ensemble
// conditioned to keep every line beyond N frozen (diagram never exceeds N
// rows). Both sides count hits of the target tuple (value of line j at every
// listed time; default target is the resting value 1-j) and the report is the
// pooled two-proportion z. Sample i uses stream base+2i (arches) and
// base+2i+1 (conditioned field), so thread partitioning never changes counts.
inline VerificationReport verify_arches(double theta, int N, const std::vector<double>& times,
                                        long long samples, const RngSpec& rng,
                                        double threshold = 4.0,
                                        std::vector<long long> target = {}, int threads = 0) {
  if (N < 1 || N > 3) throw std::invalid_argument("verify_arches: N must be in 1..3");
  if (!(theta > 0 && theta <= 1))
    throw std::invalid_argument("verify_arches: need 0 < theta <= 1 (acceptance-rate guard)");
  if (times.empty()) throw std::invalid_argument("verify_arches: no times");
  for (double t : times)
    if (!(std::abs(t) <= theta))
      throw std::invalid_argument("verify_arches: time outside [-theta, theta]");
  if (samples <= 0) throw std::invalid_argument("verify_arches: samples must be positive");
  if (target.empty())
    for (int j = 1; j <= N; ++j) target.push_back(1 - j);
  if (static_cast<int>(target.size()) != N)
    throw std::invalid_argument("verify_arches: target size must equal N");

  const long long shards = detail::shard_count(threads);
  std::vector<long long> arch_hits(static_cast<std::size_t>(shards), 0);
  std::vector<long long> line_hits(static_cast<std::size_t>(shards), 0);
  constexpr long long kConditionBudget = 1'000'000;

  const auto hits_target = [&](const auto& line_value) {
    for (double t : times)
      for (int j = 1; j <= N; ++j)
        if (line_value(j, t) != target[static_cast<std::size_t>(j - 1)]) return false;
    return true;
  };

  detail::run_sharded(samples, shards, [&](long long index, std::size_t shard) {
    // side A: one accepted arch ensemble
    {
      Pcg64 gen(rng.seed, rng.stream + 2 * static_cast<std::uint64_t>(index));
      const auto arches = sample_nonintersecting_arches(theta, N, gen);
      if (hits_target([&](int j, double t) {
            return arches[static_cast<std::size_t>(j - 1)].value_at(t);
          }))
        ++arch_hits[shard];
    }
    // side B: one accepted conditioned point field
    {
      Pcg64 gen(rng.seed, rng.stream + 2 * static_cast<std::uint64_t>(index) + 1);
      DecoratedTableauPair pair;
      bool accepted = false;
      for (long long attempt = 0; attempt < kConditionBudget; ++attempt) {
        pair = drs(sample_poisson_square(theta, gen));
        if (pair.shape().num_rows() <= N) {
          accepted = true;
          break;
        }
      }
      if (!accepted) throw std::runtime_error("verify_arches: conditioning budget exhausted");
      if (hits_target([&](int j, double t) {
            return diagram_at(pair, t).row_or_zero(j - 1) - j + 1;
          }))
        ++line_hits[shard];
    }
  });

  long long arch_total = 0, line_total = 0;
  for (long long h : arch_hits) arch_total += h;
  for (long long h : line_hits) line_total += h;

  std::ostringstream name;
  name << "arches N=" << N << " theta=" << theta << " times";
  for (double t : times) name << " " << t;
  name << " target";
  for (long long v : target) name << " " << v;
  return make_two_sample_report(
      name.str(), arch_total, samples, line_total, samples, rng, threshold,
      "side A: rejection-sampled arch ensemble; side B: point field conditioned to <= N rows");
}

}  // namespace rsproc
