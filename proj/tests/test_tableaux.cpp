#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "rsproc/enumerate.hpp"
#include "rsproc/tableau.hpp"

using namespace rsproc;

TEST_CASE("StandardTableau accepts valid fillings") {
  const StandardTableau t({{1, 2, 4}, {3, 5}, {6}});
  CHECK(t.size() == 6);
  CHECK(t.outer() == YoungDiagram({3, 2, 1}));
  CHECK(t.entry(0, 2) == 4);
  CHECK(t.entry(2, 0) == 6);
}

TEST_CASE("StandardTableau rejects invalid fillings") {
  CHECK_THROWS_AS(StandardTableau({{2, 1}}), std::invalid_argument);            // row order
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 2}}), std::invalid_argument);    // repeat
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {5}}), std::invalid_argument);       // range
  CHECK_THROWS_AS(StandardTableau({{2, 3}, {1}}), std::invalid_argument);       // column order
  CHECK_THROWS_AS(StandardTableau(SkewShape(YoungDiagram({2}), YoungDiagram()), {{1}}),
                  std::invalid_argument);                                       // grid mismatch
}

TEST_CASE("skew StandardTableau relaxes constraints across the inner boundary") {
  const SkewShape shape(YoungDiagram({2, 2}), YoungDiagram({1}));
  // column 0 has only one skew cell, so (1,0) may hold a small entry
  const StandardTableau t(shape, {{2}, {1, 3}});
  CHECK(t.entry(1, 0) == 1);
  CHECK(t.entry(0, 1) == 2);
  CHECK_THROWS_AS(StandardTableau(shape, {{1}, {3, 2}}), std::invalid_argument);
}

TEST_CASE("prefix shapes of a standard tableau grow one cell at a time") {
  const StandardTableau t({{1, 2, 4}, {3, 5}, {6}});
  CHECK(t.prefix_shape(0) == YoungDiagram());
  CHECK(t.prefix_shape(3) == YoungDiagram({2, 1}));
  CHECK(t.prefix_shape(6) == YoungDiagram({3, 2, 1}));
  for (int m = 1; m <= 6; ++m) {
    CHECK(t.prefix_shape(m).size() == m);
    CHECK(t.prefix_shape(m).contains(t.prefix_shape(m - 1)));
  }
}

TEST_CASE("SemistandardTableau validates weak rows and strict columns") {
  const SemistandardTableau t(4, {{1, 2, 2}, {3, 4}});
  CHECK(t.size() == 5);
  CHECK(t.max_entry() == 4);
  CHECK(t.content() == std::vector<long long>{1, 2, 1, 1});
  CHECK_THROWS_AS(SemistandardTableau(4, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SemistandardTableau(4, {{1, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(SemistandardTableau(2, {{1, 3}}), std::invalid_argument);
  CHECK_NOTHROW(SemistandardTableau(4, {{1, 1}, {2}}));
}

TEST_CASE("prefix shapes of a semistandard tableau are diagrams") {
  const SemistandardTableau t(4, {{1, 2, 2}, {3, 4}});
  CHECK(t.prefix_shape(2) == YoungDiagram({3}));
  CHECK(t.prefix_shape(3) == YoungDiagram({3, 1}));
  CHECK(t.prefix_shape(4) == YoungDiagram({3, 2}));
}

TEST_CASE("enumerate_standard lists exactly the valid fillings") {
  const auto ts = enumerate_standard(SkewShape(YoungDiagram({2, 1}), YoungDiagram()));
  REQUIRE(ts.size() == 2);
  const StandardTableau a({{1, 2}, {3}}), b({{1, 3}, {2}});
  CHECK(std::count(ts.begin(), ts.end(), a) == 1);
  CHECK(std::count(ts.begin(), ts.end(), b) == 1);
}

TEST_CASE("enumerate_ssyt lists exactly the valid fillings") {
  const auto ts = enumerate_ssyt(SkewShape(YoungDiagram({2}), YoungDiagram()), 2);
  REQUIRE(ts.size() == 3);
  for (const auto& rows :
       std::vector<std::vector<std::vector<int>>>{{{1, 1}}, {{1, 2}}, {{2, 2}}})
    CHECK(std::count(ts.begin(), ts.end(), SemistandardTableau(2, rows)) == 1);

  // empty shape has exactly the empty filling
  CHECK(enumerate_ssyt(SkewShape(YoungDiagram(), YoungDiagram()), 0).size() == 1);
}
