#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsproc/decorated.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/partition.hpp"

namespace rsproc {

struct TrajectoryEvent {
  double time = 0;
  YoungDiagram diagram;  // value after the event
  friend bool operator==(const TrajectoryEvent&, const TrajectoryEvent&) = default;
};

// Piecewise-constant diagram path on [-theta, theta], stored as change events.
// Growth events (size up, weakly) take effect at their time; shrink events take
// effect just after, so the value at an event time is the pre-shrink diagram.
class DiagramTrajectory {
 public:
  DiagramTrajectory() = default;

  DiagramTrajectory(double theta, std::vector<TrajectoryEvent> events)
      : theta_(theta), events_(std::move(events)) {
    if (!(theta_ > 0)) throw std::invalid_argument("DiagramTrajectory: theta must be positive");
    for (std::size_t i = 0; i < events_.size(); ++i) {
      if (!(std::abs(events_[i].time) <= theta_))
        throw std::invalid_argument("DiagramTrajectory: event time outside [-theta, theta]");
      if (i > 0 && !(events_[i - 1].time <= events_[i].time))
        throw std::invalid_argument("DiagramTrajectory: events must be time-sorted");
    }
  }

  double theta() const { return theta_; }
  const std::vector<TrajectoryEvent>& events() const { return events_; }

  YoungDiagram value_at(double t) const {
    if (!(std::abs(t) <= theta_))
      throw std::invalid_argument("DiagramTrajectory::value_at: time outside [-theta, theta]");
    // last event at or before t, stepping back over shrink events placed exactly at t
    int idx = static_cast<int>(std::upper_bound(events_.begin(), events_.end(), t,
                                                [](double v, const TrajectoryEvent& e) {
                                                  return v < e.time;
                                                }) -
                               events_.begin()) -
              1;
    while (idx >= 0 && events_[static_cast<std::size_t>(idx)].time == t && is_shrink(idx)) --idx;
    return idx < 0 ? YoungDiagram() : events_[static_cast<std::size_t>(idx)].diagram;
  }

  friend bool operator==(const DiagramTrajectory&, const DiagramTrajectory&) = default;

 private:
  bool is_shrink(int idx) const {
    const long long prev =
        idx > 0 ? events_[static_cast<std::size_t>(idx) - 1].diagram.size() : 0;
    return events_[static_cast<std::size_t>(idx)].diagram.size() < prev;
  }

  double theta_ = 1;
  std::vector<TrajectoryEvent> events_;
};

// Diagram at time t read directly off the decorated pair: cells whose left
// decoration is at most theta + t (t <= 0), or whose right decoration is at
// most theta - t (t >= 0). Comparisons are evaluated in appearance-time form
// (dec - theta <= t, resp. theta - dec >= t) so this view, the event list, and
// the window process agree bit-for-bit at event times.
inline YoungDiagram diagram_at(const DecoratedTableauPair& pair, double t) {
  const double theta = pair.theta();
  if (!(std::abs(t) <= theta))
    throw std::invalid_argument("diagram_at: time outside [-theta, theta]");
  if (t <= 0) {
    const auto& dec = pair.left_decorations();
    const int m = static_cast<int>(
        std::partition_point(dec.begin(), dec.end(),
                             [&](double d) { return d - theta <= t; }) -
        dec.begin());
    return pair.left().prefix_shape(m);
  }
  const auto& dec = pair.right_decorations();
  const int m = static_cast<int>(
      std::partition_point(dec.begin(), dec.end(),
                           [&](double d) { return theta - d >= t; }) -
      dec.begin());
  return pair.right().prefix_shape(m);
}

// Line view: value of the 1-based i-th line at time t is (row i) - i.
inline long long line_at(const DecoratedTableauPair& pair, int i, double t) {
  if (i < 1) throw std::invalid_argument("line_at: line index must be at least 1");
  return diagram_at(pair, t).row_or_zero(i - 1) - i;
}

// Full event list of the diagram path: one growth event per left decoration,
// one shrink event per right decoration (2n events; a single baseline event
// for the empty pair).
inline DiagramTrajectory full_trajectory(const DecoratedTableauPair& pair) {
  const double theta = pair.theta();
  const int n = static_cast<int>(pair.size());
  std::vector<TrajectoryEvent> events;
  if (n == 0) {
    events.push_back({-theta, YoungDiagram()});
    return DiagramTrajectory(theta, std::move(events));
  }
  events.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= n; ++j)
    events.push_back({pair.left_decorations()[static_cast<std::size_t>(j - 1)] - theta,
                      pair.left().prefix_shape(j)});
  for (int j = n; j >= 1; --j)
    events.push_back({theta - pair.right_decorations()[static_cast<std::size_t>(j - 1)],
                      pair.right().prefix_shape(j - 1)});
  return DiagramTrajectory(theta, std::move(events));
}

// Number of lattice sites j*theta/k, j = 1..k, with value at most s.
inline int lattice_count_leq(double theta, int k, double s) {
  int c = 0;
  for (int j = 1; j <= k; ++j)
    if (j * theta / k <= s) ++c;
  return c;
}

// Number of lattice sites in the half-open interval (a, b].
inline int lattice_count_between(double theta, int k, double a, double b) {
  int c = 0;
  for (int j = 1; j <= k; ++j) {
    const double x = j * theta / k;
    if (x > a && x <= b) ++c;
  }
  return c;
}

// Discrete counterpart of diagram_at on the lattice-decorated pair.
inline YoungDiagram discrete_diagram_at(const SemistandardPair& pair, double theta, int k,
                                        double t) {
  if (!(theta > 0) || k < 1)
    throw std::invalid_argument("discrete_diagram_at: need theta > 0 and k >= 1");
  if (pair.max_entry() != k)
    throw std::invalid_argument("discrete_diagram_at: pair entry bound does not match k");
  if (!(std::abs(t) <= theta))
    throw std::invalid_argument("discrete_diagram_at: time outside [-theta, theta]");
  // Count sites in appearance-time form (site - theta <= t, resp.
  // theta - site >= t) to match the event times the trajectory builder emits.
  int m = 0;
  if (t <= 0) {
    for (int j = 1; j <= k; ++j)
      if (j * theta / k - theta <= t) ++m;
    return pair.left().prefix_shape(m);
  }
  for (int j = 1; j <= k; ++j)
    if (theta - j * theta / k >= t) ++m;
  return pair.right().prefix_shape(m);
}

// Event list of the discrete path; events may move several cells at once.
inline DiagramTrajectory discrete_full_trajectory(const SemistandardPair& pair, double theta,
                                                  int k) {
  if (!(theta > 0) || k < 1)
    throw std::invalid_argument("discrete_full_trajectory: need theta > 0 and k >= 1");
  if (pair.max_entry() != k)
    throw std::invalid_argument("discrete_full_trajectory: pair entry bound does not match k");
  std::vector<TrajectoryEvent> events;
  YoungDiagram prev;
  for (int m = 1; m <= k; ++m) {
    auto shape = pair.left().prefix_shape(m);
    if (shape != prev) {
      events.push_back({m * theta / k - theta, shape});
      prev = std::move(shape);
    }
  }
  for (int m = k; m >= 1; --m) {
    auto shape = pair.right().prefix_shape(m - 1);
    if (shape != prev) {
      events.push_back({theta - m * theta / k, shape});
      prev = std::move(shape);
    }
  }
  if (events.empty()) events.push_back({-theta, YoungDiagram()});
  return DiagramTrajectory(theta, std::move(events));
}

struct LineChange {
  int line_index = 0;  // 1-based
  double time = 0;
  long long new_value = 0;  // (row length) - (line index)
  friend bool operator==(const LineChange&, const LineChange&) = default;
};

// Step-function view of a trajectory, one change row per line move. Within a
// multi-cell event, growth is listed top line first and shrink bottom line
// first, so every prefix of the change list is a valid diagram state.
class LineEnsemble {
 public:
  explicit LineEnsemble(const DiagramTrajectory& trajectory) : theta_(trajectory.theta()) {
    YoungDiagram prev;
    for (const auto& event : trajectory.events()) {
      const auto& next = event.diagram;
      const int span = std::max(prev.num_rows(), next.num_rows());
      const bool grow = next.size() >= prev.size();
      num_lines_ = std::max(num_lines_, next.num_rows());
      for (int step = 0; step < span; ++step) {
        const int r = grow ? step : span - 1 - step;
        if (prev.row_or_zero(r) != next.row_or_zero(r))
          changes_.push_back({r + 1, event.time, next.row_or_zero(r) - (r + 1)});
      }
      prev = next;
    }
  }

  double theta() const { return theta_; }
  int num_lines() const { return num_lines_; }
  const std::vector<LineChange>& changes() const { return changes_; }

 private:
  double theta_ = 1;
  int num_lines_ = 0;
  std::vector<LineChange> changes_;
};

// CSV with header line_index,event_time,new_value; times printed with %.17g so
// parsing recovers the exact double.
inline std::string line_ensemble_csv(const LineEnsemble& ensemble) {
  std::string out = "line_index,event_time,new_value\n";
  char buf[96];
  for (const auto& ch : ensemble.changes()) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%lld\n", ch.line_index, ch.time, ch.new_value);
    out += buf;
  }
  return out;
}

// Rebuild a trajectory from the CSV view: each change row becomes one event
// applied to the running diagram.
inline DiagramTrajectory trajectory_from_line_csv(const std::string& csv, double theta) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "line_index,event_time,new_value")
    throw std::invalid_argument("trajectory_from_line_csv: bad header");
  std::vector<TrajectoryEvent> events;
  std::vector<int> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int index = 0;
    double time = 0;
    long long value = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lld", &index, &time, &value) != 3)
      throw std::invalid_argument("trajectory_from_line_csv: bad row: " + line);
    if (index < 1) throw std::invalid_argument("trajectory_from_line_csv: bad line index");
    if (rows.size() < static_cast<std::size_t>(index)) rows.resize(static_cast<std::size_t>(index), 0);
    rows[static_cast<std::size_t>(index - 1)] = static_cast<int>(value + index);
    std::vector<int> trimmed = rows;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    events.push_back({time, YoungDiagram(std::move(trimmed))});
  }
  if (events.empty()) events.push_back({-theta, YoungDiagram()});
  return DiagramTrajectory(theta, std::move(events));
}

}  // namespace rsproc
