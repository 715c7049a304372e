#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rsproc/curve.hpp"
#include "rsproc/decorated.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/trajectory.hpp"

using namespace rsproc;

namespace {

PointConfiguration random_config(std::mt19937& gen, double theta, int max_points) {
  std::uniform_int_distribution<int> nd(0, max_points);
  std::uniform_real_distribution<double> ud(0.0, theta);
  while (true) {
    const int n = nd(gen);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({ud(gen), ud(gen)});
    try {
      return PointConfiguration(theta, std::move(pts));
    } catch (const std::invalid_argument&) {
    }
  }
}

// All probe times for a pair: event times, midpoints between them, endpoints.
std::vector<double> probe_times(const DecoratedTableauPair& pair) {
  const double theta = pair.theta();
  std::vector<double> ts{-theta, 0.0, theta};
  for (double d : pair.left_decorations()) ts.push_back(d - theta);
  for (double d : pair.right_decorations()) ts.push_back(theta - d);
  std::sort(ts.begin(), ts.end());
  std::vector<double> out = ts;
  for (std::size_t i = 1; i < ts.size(); ++i) out.push_back((ts[i - 1] + ts[i]) / 2);
  for (int g = 0; g <= 50; ++g) out.push_back(-theta + 2 * theta * g / 50.0);
  return out;
}

const StandardTableau kLeft({{1, 2, 4}, {3, 5}, {6}});
const StandardTableau kRight({{1, 2, 3}, {4, 5}, {6}});
const std::vector<double> kLeftDec{0.02, 0.03, 0.05, 0.07, 0.11, 0.13};
const std::vector<double> kRightDec{0.2, 0.3, 0.4, 0.5, 0.6, 0.7};

}  // namespace

TEST_CASE("diagram_at reads prefixes of the drawn example") {
  const DecoratedTableauPair pair(1.0, kLeft, kRight, kLeftDec, kRightDec);
  CHECK(diagram_at(pair, -1.0) == YoungDiagram());
  CHECK(diagram_at(pair, -1.0 + 0.06) == YoungDiagram({2, 1}));
  CHECK(diagram_at(pair, 0.0) == YoungDiagram({3, 2, 1}));
  CHECK(diagram_at(pair, 1.0 - 0.5) == YoungDiagram({3, 1}));  // x = 0.5 still inside
  CHECK(diagram_at(pair, 0.5000001) == YoungDiagram({3}));     // and gone just after
  CHECK(diagram_at(pair, 1.0) == YoungDiagram());
  CHECK_THROWS_AS(diagram_at(pair, 1.5), std::invalid_argument);
}

TEST_CASE("diagram_at includes growth at its time and keeps cells through drop times") {
  const DecoratedTableauPair pair(1.0, StandardTableau(std::vector<std::vector<int>>{{1}}),
                                  StandardTableau(std::vector<std::vector<int>>{{1}}), {0.25},
                                  {0.4});
  // cell appears exactly at t = 0.25 - 1
  CHECK(diagram_at(pair, -0.75) == YoungDiagram({1}));
  CHECK(diagram_at(pair, -0.7500001) == YoungDiagram());
  // cell persists through t = 1 - 0.4 and is gone just after
  CHECK(diagram_at(pair, 0.6) == YoungDiagram({1}));
  CHECK(diagram_at(pair, 0.6000001) == YoungDiagram());
}

TEST_CASE("full_trajectory emits 2n change events and a baseline for empty pairs") {
  const DecoratedTableauPair pair(1.0, kLeft, kRight, kLeftDec, kRightDec);
  CHECK(full_trajectory(pair).events().size() == 12);

  const DecoratedTableauPair empty(1.0, StandardTableau(std::vector<std::vector<int>>{}),
                                   StandardTableau(std::vector<std::vector<int>>{}), {}, {});
  const auto traj = full_trajectory(empty);
  REQUIRE(traj.events().size() == 1);
  CHECK(traj.events()[0].time == -1.0);
  CHECK(traj.events()[0].diagram == YoungDiagram());
  CHECK(traj.value_at(0.3) == YoungDiagram());
}

TEST_CASE("trajectory value_at agrees with diagram_at everywhere") {
  std::mt19937 gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pair = drs(random_config(gen, 1.0, 8));
    const auto traj = full_trajectory(pair);
    for (double t : probe_times(pair)) CHECK(traj.value_at(t) == diagram_at(pair, t));
  }
}

TEST_CASE("the diagram at any time is contained in the diagram at zero") {
  std::mt19937 gen(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pair = drs(random_config(gen, 1.0, 8));
    const auto center = diagram_at(pair, 0.0);
    for (double t : probe_times(pair)) CHECK(center.contains(diagram_at(pair, t)));
  }
}

TEST_CASE("lines never intersect and decrease strictly in the index") {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pair = drs(random_config(gen, 1.0, 8));
    for (double t : probe_times(pair))
      for (int i = 1; i <= 5; ++i) CHECK(line_at(pair, i, t) > line_at(pair, i + 1, t));
  }
  const DecoratedTableauPair pair(1.0, kLeft, kRight, kLeftDec, kRightDec);
  CHECK(line_at(pair, 1, 0.0) == 2);   // row 1 length 3
  CHECK(line_at(pair, 4, 0.0) == -4);  // beyond the last row
  CHECK_THROWS_AS(line_at(pair, 0, 0.0), std::invalid_argument);
}

TEST_CASE("curve window matches the decorated pair at all probe times") {
  std::mt19937 gen(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto config = random_config(gen, 1.0, 6);
    const auto pair = drs(config);
    for (double t : probe_times(pair)) CHECK(curve_process(config, t) == diagram_at(pair, t));
  }
}

TEST_CASE("curve window on a single point opens and closes at the exact times") {
  const PointConfiguration c(1.0, {{0.3, 0.8}});
  const double open = 0.8 - 1.0;   // appearance time of the point
  const double close = 1.0 - 0.3;  // last time the point is inside
  CHECK(curve_process(c, open) == YoungDiagram({1}));
  CHECK(curve_process(c, std::nextafter(open, -1.0)) == YoungDiagram());
  CHECK(curve_process(c, close) == YoungDiagram({1}));
  CHECK(curve_process(c, std::nextafter(close, 1.0)) == YoungDiagram());
  CHECK_THROWS_AS(curve_process(c, -1.1), std::invalid_argument);
}

TEST_CASE("discrete diagram reads lattice prefixes of the drawn tableau") {
  const SemistandardTableau left(4, {{1, 2, 2}, {3, 4}});
  const SemistandardTableau right(4, {{1, 1, 2}, {2, 3}});
  const SemistandardPair pair(left, right);
  const double theta = 1.0;
  CHECK(discrete_diagram_at(pair, theta, 4, -theta + 2 * theta / 4) == YoungDiagram({3}));
  CHECK(discrete_diagram_at(pair, theta, 4, -theta) == YoungDiagram());
  CHECK(discrete_diagram_at(pair, theta, 4, 0.0) == YoungDiagram({3, 2}));
  CHECK(discrete_diagram_at(pair, theta, 4, theta) == YoungDiagram());
  CHECK(discrete_diagram_at(pair, theta, 4, theta - 2 * theta / 4) == YoungDiagram({3, 1}));
  CHECK_THROWS_AS(discrete_diagram_at(pair, theta, 3, 0.0), std::invalid_argument);
}

TEST_CASE("discrete trajectory agrees with discrete_diagram_at") {
  std::mt19937 gen(41);
  std::uniform_int_distribution<long long> ed(0, 2);
  const double theta = 1.0;
  const int k = 5;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(k),
                                               std::vector<long long>(static_cast<std::size_t>(k)));
    for (auto& row : counts)
      for (auto& v : row) v = ed(gen);
    const auto pair = rsk(LatticeConfiguration(theta, k, counts));
    const auto traj = discrete_full_trajectory(pair, theta, k);
    std::vector<double> ts{-theta, 0.0, theta};
    for (int j = 1; j <= k; ++j) {
      ts.push_back(j * theta / k - theta);
      ts.push_back(theta - j * theta / k);
      ts.push_back(j * theta / k - theta + 0.01);
      ts.push_back(theta - j * theta / k - 0.01);
    }
    for (double t : ts) CHECK(traj.value_at(t) == discrete_diagram_at(pair, theta, k, t));
  }
}

TEST_CASE("lattice counting helpers") {
  CHECK(lattice_count_leq(1.0, 4, 0.5) == 2);
  CHECK(lattice_count_leq(1.0, 4, 1.0) == 4);
  CHECK(lattice_count_leq(1.0, 4, 0.0) == 0);
  CHECK(lattice_count_between(1.0, 4, 0.25, 0.75) == 2);
  CHECK(lattice_count_between(1.0, 4, 0.0, 1.0) == 4);
  CHECK(lattice_count_between(1.0, 4, 0.5, 0.5) == 0);
}

TEST_CASE("line ensemble CSV round-trips through the importer") {
  std::mt19937 gen(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pair = drs(random_config(gen, 1.0, 8));
    const auto traj = full_trajectory(pair);
    const auto csv = line_ensemble_csv(LineEnsemble(traj));
    if (pair.size() == 0) continue;  // empty pairs re-import as the baseline event
    CHECK(trajectory_from_line_csv(csv, 1.0) == traj);
  }
  // empty trajectory round-trips onto the baseline event
  const DecoratedTableauPair empty(1.0, StandardTableau(std::vector<std::vector<int>>{}),
                                   StandardTableau(std::vector<std::vector<int>>{}), {}, {});
  const auto traj = full_trajectory(empty);
  CHECK(trajectory_from_line_csv(line_ensemble_csv(LineEnsemble(traj)), 1.0) == traj);
}

TEST_CASE("line ensemble lists one change per continuous event") {
  const DecoratedTableauPair pair(1.0, kLeft, kRight, kLeftDec, kRightDec);
  const LineEnsemble ensemble(full_trajectory(pair));
  CHECK(ensemble.changes().size() == 12);
  CHECK(ensemble.num_lines() == 3);
  const auto csv = line_ensemble_csv(ensemble);
  CHECK(csv.substr(0, 32) == "line_index,event_time,new_value\n");
}

TEST_CASE("trajectory construction validates ordering and range") {
  CHECK_THROWS_AS(DiagramTrajectory(1.0, {{0.5, YoungDiagram({1})}, {-0.5, YoungDiagram()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiagramTrajectory(1.0, {{1.5, YoungDiagram({1})}}), std::invalid_argument);
  CHECK_THROWS_AS(DiagramTrajectory(-1.0, {}), std::invalid_argument);
}
