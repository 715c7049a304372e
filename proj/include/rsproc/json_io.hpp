#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rsproc/decorated.hpp"
#include "rsproc/fdd.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/partition.hpp"
#include "rsproc/point_config.hpp"
#include "rsproc/report.hpp"
#include "rsproc/trajectory.hpp"
#include "rsproc/version.hpp"

namespace rsproc {

// Violations of the on-disk JSON schemas. The CLI maps this (and only this)
// to the usage/config exit code.
struct JsonSchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void expect(bool ok, const std::string& message) {
  if (!ok) throw JsonSchemaError("json: " + message);
}

inline double number_field(const nlohmann::json& j, const char* key) {
  expect(j.contains(key), std::string("missing field '") + key + "'");
  expect(j.at(key).is_number(), std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

inline long long integer_field(const nlohmann::json& j, const char* key) {
  expect(j.contains(key), std::string("missing field '") + key + "'");
  expect(j.at(key).is_number_integer(), std::string("field '") + key + "' must be an integer");
  return j.at(key).get<long long>();
}

}  // namespace detail

// --- Young diagrams: a plain array of row lengths -------------------------

inline nlohmann::json diagram_to_json(const YoungDiagram& diagram) {
  return nlohmann::json(diagram.rows());
}

inline YoungDiagram diagram_from_json(const nlohmann::json& j) {
  detail::expect(j.is_array(), "diagram must be an array of row lengths");
  std::vector<int> rows;
  rows.reserve(j.size());
  for (const auto& entry : j) {
    detail::expect(entry.is_number_integer(), "diagram rows must be integers");
    rows.push_back(entry.get<int>());
  }
  try {
    return YoungDiagram(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(std::string("json: ") + e.what());
  }
}

// --- Point configurations: {theta, points: [[x, y], ...]} ------------------

inline nlohmann::json point_config_to_json(const PointConfiguration& config) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : config.points()) points.push_back({p.x, p.y});
  return {{"theta", config.theta()}, {"points", std::move(points)}};
}

inline PointConfiguration point_config_from_json(const nlohmann::json& j) {
  detail::expect(j.is_object(), "point configuration must be an object");
  const double theta = detail::number_field(j, "theta");
  detail::expect(j.contains("points") && j.at("points").is_array(),
                 "field 'points' must be an array");
  std::vector<Point> points;
  for (const auto& entry : j.at("points")) {
    detail::expect(entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                       entry[1].is_number(),
                   "each point must be a [x, y] pair of numbers");
    points.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  try {
    return PointConfiguration(theta, std::move(points));
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(std::string("json: ") + e.what());
  }
}

// --- Lattice configurations: {theta, k, counts: k x k matrix} --------------

inline nlohmann::json lattice_to_json(const LatticeConfiguration& config) {
  return {{"theta", config.theta()}, {"k", config.k()}, {"counts", config.counts()}};
}

inline LatticeConfiguration lattice_from_json(const nlohmann::json& j) {
  detail::expect(j.is_object(), "lattice configuration must be an object");
  const double theta = detail::number_field(j, "theta");
  const long long k = detail::integer_field(j, "k");
  detail::expect(j.contains("counts") && j.at("counts").is_array(),
                 "field 'counts' must be an array of rows");
  std::vector<std::vector<long long>> counts;
  for (const auto& row : j.at("counts")) {
    detail::expect(row.is_array(), "each counts row must be an array");
    std::vector<long long> out_row;
    for (const auto& entry : row) {
      detail::expect(entry.is_number_integer(), "counts entries must be integers");
      out_row.push_back(entry.get<long long>());
    }
    counts.push_back(std::move(out_row));
  }
  try {
    return LatticeConfiguration(theta, static_cast<int>(k), std::move(counts));
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(std::string("json: ") + e.what());
  }
}

// --- Trajectories: {theta, events: [{time, diagram}, ...]} -----------------

inline nlohmann::json trajectory_to_json(const DiagramTrajectory& trajectory) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& event : trajectory.events())
    events.push_back({{"time", event.time}, {"diagram", diagram_to_json(event.diagram)}});
  return {{"theta", trajectory.theta()}, {"events", std::move(events)}};
}

inline DiagramTrajectory trajectory_from_json(const nlohmann::json& j) {
  detail::expect(j.is_object(), "trajectory must be an object");
  const double theta = detail::number_field(j, "theta");
  detail::expect(j.contains("events") && j.at("events").is_array(),
                 "field 'events' must be an array");
  std::vector<TrajectoryEvent> events;
  for (const auto& entry : j.at("events")) {
    detail::expect(entry.is_object() && entry.contains("diagram"),
                   "each event must be an object with 'time' and 'diagram'");
    events.push_back({detail::number_field(entry, "time"),
                      diagram_from_json(entry.at("diagram"))});
  }
  try {
    return DiagramTrajectory(theta, std::move(events));
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(std::string("json: ") + e.what());
  }
}

// --- Pin queries: {theta, pins: [{time, diagram}, ...], k?} ----------------

inline nlohmann::json query_to_json(const FddQuery& query) {
  nlohmann::json pins = nlohmann::json::array();
  for (const auto& pin : query.pins())
    pins.push_back({{"time", pin.time}, {"diagram", diagram_to_json(pin.diagram)}});
  nlohmann::json out = {{"theta", query.theta()}, {"pins", std::move(pins)}};
  if (query.discrete_k()) out["k"] = *query.discrete_k();
  return out;
}

inline FddQuery query_from_json(const nlohmann::json& j) {
  detail::expect(j.is_object(), "query must be an object");
  const double theta = detail::number_field(j, "theta");
  detail::expect(j.contains("pins") && j.at("pins").is_array(), "field 'pins' must be an array");
  std::vector<Pin> pins;
  for (const auto& entry : j.at("pins")) {
    detail::expect(entry.is_object() && entry.contains("diagram"),
                   "each pin must be an object with 'time' and 'diagram'");
    pins.push_back({detail::number_field(entry, "time"), diagram_from_json(entry.at("diagram"))});
  }
  std::optional<int> k;
  if (j.contains("k")) k = static_cast<int>(detail::integer_field(j, "k"));
  try {
    return FddQuery(theta, std::move(pins), k);
  } catch (const std::invalid_argument& e) {
    throw JsonSchemaError(std::string("json: ") + e.what());
  }
}

// --- Verification reports (write-only; embeds the code state) ---------------

inline nlohmann::json report_to_json(const VerificationReport& report) {
  return {{"name", report.name},
          {"samples", report.samples},
          {"empirical", report.empirical},
          {"std_error", report.std_error},
          {"exact", report.exact},
          {"z_score", report.z_score},
          {"threshold", report.threshold},
          {"pass", report.pass},
          {"seed", report.seed},
          {"stream", report.stream},
          {"notes", report.notes},
          {"code", kGitDescribe}};
}

}  // namespace rsproc
