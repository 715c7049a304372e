#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rsproc/decorated.hpp"
#include "rsproc/dimension.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/point_config.hpp"
#include "rsproc/rs.hpp"

using namespace rsproc;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Independent check: longest increasing subsequence by quadratic DP.
int lis_quadratic(const std::vector<int>& v) {
  std::vector<int> best(v.size(), 1);
  int ans = v.empty() ? 0 : 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (v[j] < v[i]) best[i] = std::max(best[i], best[j] + 1);
    ans = std::max(ans, best[i]);
  }
  return ans;
}

PointConfiguration random_config(std::mt19937& gen, double theta, int max_points) {
  std::uniform_int_distribution<int> nd(0, max_points);
  std::uniform_real_distribution<double> ud(0.0, theta);
  while (true) {
    const int n = nd(gen);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back({ud(gen), ud(gen)});
    try {
      return PointConfiguration(theta, std::move(pts));
    } catch (const std::invalid_argument&) {
      // coordinate collision; redraw
    }
  }
}

}  // namespace

TEST_CASE("Permutation validates and inverts") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  const Permutation p({3, 1, 2});
  CHECK(p.inverse() == Permutation({2, 3, 1}));
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("row insertion matches worked examples") {
  {
    auto [ins, rec] = rs(Permutation({2, 1}));
    CHECK(ins == StandardTableau({{1}, {2}}));
    CHECK(rec == StandardTableau({{1}, {2}}));
  }
  {
    auto [ins, rec] = rs(Permutation({3, 1, 2}));
    CHECK(ins == StandardTableau({{1, 2}, {3}}));
    CHECK(rec == StandardTableau({{1, 3}, {2}}));
  }
  {
    auto [ins, rec] = rs(Permutation({1, 2, 3}));
    CHECK(ins == StandardTableau({{1, 2, 3}}));
    CHECK(rec == StandardTableau({{1, 2, 3}}));
  }
  {
    auto [ins, rec] = rs(Permutation(std::vector<int>{}));
    CHECK(ins.size() == 0);
    CHECK(rec.size() == 0);
  }
}

TEST_CASE("row insertion round-trips over all permutations up to n = 5") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      auto [ins, rec] = rs(p);
      CHECK(ins.outer() == rec.outer());
      CHECK(rs_inverse(ins, rec) == p);
    }
}

TEST_CASE("row insertion is a bijection onto same-shape tableau pairs") {
  const int n = 4;
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
  std::map<YoungDiagram, long long> shape_counts;
  for (const auto& p : all_permutations(n)) {
    auto [ins, rec] = rs(p);
    images.insert({ins.entry_rows(), rec.entry_rows()});
    ++shape_counts[ins.outer()];
  }
  CHECK(images.size() == 24);
  for (const auto& [shape, count] : shape_counts) {
    const BigInt f = dim_standard(shape);
    CHECK(BigInt(count) == f * f);
  }
}

TEST_CASE("inverting the permutation swaps the tableau pair") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      auto [ins, rec] = rs(p);
      auto [ins_inv, rec_inv] = rs(p.inverse());
      CHECK(ins_inv == rec);
      CHECK(rec_inv == ins);
    }
}

TEST_CASE("first row length equals longest increasing subsequence") {
  for (const auto& p : all_permutations(6)) {
    auto [ins, rec] = rs(p);
    CHECK(ins.outer().row_or_zero(0) == lis_quadratic(p.one_line()));
  }
  std::mt19937 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v(30);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), gen);
    const Permutation p(v);
    auto [ins, rec] = rs(p);
    CHECK(ins.outer().row_or_zero(0) == lis_quadratic(v));
  }
}

TEST_CASE("rs_inverse rejects mismatched shapes") {
  auto [a, b] = rs(Permutation({2, 1}));
  auto [c, d] = rs(Permutation({1, 2}));
  CHECK_THROWS_AS(rs_inverse(a, d), std::invalid_argument);
}

TEST_CASE("PointConfiguration validates and sorts") {
  const PointConfiguration c(1.0, {{0.4, 0.9}, {0.1, 0.5}, {0.2, 0.3}});
  CHECK(c.points()[0].x == 0.1);
  CHECK(c.points()[2].x == 0.4);
  CHECK_THROWS_AS(PointConfiguration(1.0, {{0.1, 0.2}, {0.1, 0.3}}), std::invalid_argument);
  CHECK_THROWS_AS(PointConfiguration(1.0, {{0.1, 0.2}, {0.3, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(PointConfiguration(1.0, {{1.5, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(PointConfiguration(0.0, {}), std::invalid_argument);
}

TEST_CASE("associated permutation ranks y-coordinates in x-order") {
  const PointConfiguration c(1.0, {{0.1, 0.5}, {0.2, 0.3}, {0.4, 0.9}});
  CHECK(associated_permutation(c) == Permutation({2, 1, 3}));
  CHECK(associated_permutation(PointConfiguration(1.0, {})) == Permutation(std::vector<int>{}));
  // order of the input list is irrelevant
  const PointConfiguration shuffled(1.0, {{0.4, 0.9}, {0.1, 0.5}, {0.2, 0.3}});
  CHECK(associated_permutation(shuffled) == Permutation({2, 1, 3}));
}

TEST_CASE("decorated correspondence on a single point") {
  const PointConfiguration c(2.0, {{0.7, 1.3}});
  const auto pair = drs(c);
  CHECK(pair.shape() == YoungDiagram({1}));
  CHECK(pair.left_decorations() == std::vector<double>{1.3});
  CHECK(pair.right_decorations() == std::vector<double>{0.7});
  CHECK(drs_inverse(pair) == c);
}

TEST_CASE("decorated correspondence reproduces a drawn tableau pair") {
  // Fix the insertion-side tableau and decorations, pick a recording tableau,
  // rebuild the points by hand, and check the correspondence lands back on it.
  const StandardTableau left({{1, 2, 4}, {3, 5}, {6}});
  const StandardTableau right({{1, 2, 3}, {4, 5}, {6}});
  const std::vector<double> ys{0.02, 0.03, 0.05, 0.07, 0.11, 0.13};
  const std::vector<double> xs{0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  const auto perm = rs_inverse(left, right);
  std::vector<Point> pts;
  for (int i = 1; i <= 6; ++i)
    pts.push_back({xs[static_cast<std::size_t>(i - 1)],
                   ys[static_cast<std::size_t>(perm.apply(i) - 1)]});
  const auto pair = drs(PointConfiguration(1.0, std::move(pts)));
  CHECK(pair.left() == left);
  CHECK(pair.right() == right);
  CHECK(pair.left_decorations() == ys);
  CHECK(pair.right_decorations() == xs);
}

TEST_CASE("decorated correspondence round-trips on random configurations") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto config = random_config(gen, 1.0, 8);
    const auto pair = drs(config);
    CHECK(drs_inverse(pair) == config);
  }
}

TEST_CASE("DecoratedTableauPair validates decorations") {
  const StandardTableau t(std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(DecoratedTableauPair(1.0, t, t, {0.5, 0.6}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DecoratedTableauPair(1.0, t, t, {1.5}, {0.5}), std::invalid_argument);
  const StandardTableau two({{1, 2}});
  CHECK_THROWS_AS(DecoratedTableauPair(1.0, two, two, {0.5, 0.4}, {0.1, 0.2}),
                  std::invalid_argument);
  auto [a, b] = rs(Permutation({2, 1}));
  CHECK_THROWS_AS(DecoratedTableauPair(1.0, a, two, {0.1, 0.2}, {0.3, 0.4}),
                  std::invalid_argument);
}

TEST_CASE("matrix correspondence matches worked examples") {
  {
    const auto pair = rsk(LatticeConfiguration(1.0, 2, {{1, 0}, {0, 1}}));
    CHECK(pair.left() == SemistandardTableau(2, {{1, 2}}));
    CHECK(pair.right() == SemistandardTableau(2, {{1, 2}}));
  }
  {
    const auto pair = rsk(LatticeConfiguration(1.0, 2, {{0, 1}, {1, 0}}));
    CHECK(pair.left() == SemistandardTableau(2, {{1}, {2}}));
    CHECK(pair.right() == SemistandardTableau(2, {{1}, {2}}));
  }
  {
    const auto pair = rsk(LatticeConfiguration(1.0, 1, {{2}}));
    CHECK(pair.left() == SemistandardTableau(1, {{1, 1}}));
    CHECK(pair.right() == SemistandardTableau(1, {{1, 1}}));
  }
}

TEST_CASE("matrix correspondence round-trips exhaustively, 2x2 with sum <= 3") {
  for (int s = 0; s <= 3; ++s)
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b)
        for (int c = 0; a + b + c <= s; ++c) {
          const int d = s - a - b - c;
          const LatticeConfiguration m(
              1.0, 2, {{a, b}, {c, d}});
          const auto pair = rsk(m);
          CHECK(rsk_inverse(pair, m.theta()) == m);
        }
}

TEST_CASE("matrix correspondence round-trips on random 3x3 matrices") {
  std::mt19937 gen(13);
  std::uniform_int_distribution<long long> ed(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::vector<long long>> counts(3, std::vector<long long>(3));
    for (auto& row : counts)
      for (auto& v : row) v = ed(gen);
    const LatticeConfiguration m(1.0, 3, counts);
    CHECK(rsk_inverse(rsk(m), 1.0) == m);
  }
}

TEST_CASE("matrix correspondence preserves margins as tableau contents") {
  std::mt19937 gen(17);
  std::uniform_int_distribution<long long> ed(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<long long>> counts(4, std::vector<long long>(4));
    for (auto& row : counts)
      for (auto& v : row) v = ed(gen);
    const LatticeConfiguration m(1.0, 4, counts);
    const auto pair = rsk(m);

    std::vector<long long> row_sums(4, 0), col_sums(4, 0);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        row_sums[static_cast<std::size_t>(a)] += counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        col_sums[static_cast<std::size_t>(b)] += counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    CHECK(pair.right().content() == row_sums);  // recording side carries x-indices
    CHECK(pair.left().content() == col_sums);   // insertion side carries y-indices
  }
}

TEST_CASE("matrix correspondence image counts match matrix counts per total") {
  // Same-shape pair counts with entries <= 2: sum over matrices with total n of 1
  // must equal the number of distinct images, and totals group as C(n+3, 3).
  std::map<long long, std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>>>
      images_by_total;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d) {
          if (a + b + c + d > 3) continue;
          const auto pair = rsk(LatticeConfiguration(1.0, 2, {{a, b}, {c, d}}));
          images_by_total[a + b + c + d].insert(
              {pair.left().entry_rows(), pair.right().entry_rows()});
        }
  CHECK(images_by_total[0].size() == 1);
  CHECK(images_by_total[1].size() == 4);
  CHECK(images_by_total[2].size() == 10);
  CHECK(images_by_total[3].size() == 20);
}

TEST_CASE("LatticeConfiguration validates") {
  CHECK_THROWS_AS(LatticeConfiguration(1.0, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(LatticeConfiguration(1.0, 2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(LatticeConfiguration(1.0, 2, {{1, 2}, {3, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(LatticeConfiguration(-1.0, 1, {{0}}), std::invalid_argument);
  CHECK(LatticeConfiguration(1.0, 2, {{1, 2}, {3, 4}}).total() == 10);
}
