// Command-line front end: seeded sampling, trajectory extraction, closed-form
// probability evaluation, the verification suite, top-line scaling tables, and
// figure rendering. Exit codes: 0 success, 1 verification failure, 2 usage or
// config error.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsproc/decorated.hpp"
#include "rsproc/fdd.hpp"
#include "rsproc/json_io.hpp"
#include "rsproc/lattice.hpp"
#include "rsproc/lln.hpp"
#include "rsproc/render.hpp"
#include "rsproc/samplers.hpp"
#include "rsproc/suite.hpp"
#include "rsproc/trajectory.hpp"

namespace {

using namespace rsproc;

// "-" designates stdin/stdout so subcommands compose in pipelines.
std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    if (!std::cout.flush()) throw std::runtime_error("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw JsonSchemaError(std::string("json: ") + err.what());
  }
}

struct SampleOptions {
  std::uint64_t seed = 4;
  std::uint64_t stream = 0;
  std::int64_t samples = 1;
  double theta = 1.0;
  int k = 0;
  std::string out = "-";
};

// One configuration per line; sample i always uses stream base + i, so a file
// can be regenerated piecewise or in parallel.
int run_sample(const SampleOptions& opt) {
  if (opt.samples < 1) throw std::invalid_argument("sample: need --samples >= 1");
  std::string lines;
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const RngSpec spec{opt.seed, opt.stream + static_cast<std::uint64_t>(i)};
    const nlohmann::json line =
        opt.k > 0 ? lattice_to_json(sample_geometric_lattice(opt.theta, opt.k, spec))
                  : point_config_to_json(sample_poisson_square(opt.theta, spec));
    lines += line.dump();
    lines += '\n';
  }
  write_output(opt.out, lines);
  return 0;
}

struct TrajectoryOptions {
  std::string input;  // empty: draw a fresh configuration instead
  std::uint64_t seed = 4;
  std::uint64_t stream = 0;
  double theta = 1.0;
  int k = 0;
  std::string format = "json";
  std::string out = "-";
};

DiagramTrajectory trajectory_of_config(const nlohmann::json& j) {
  if (j.contains("points")) return full_trajectory(drs(point_config_from_json(j)));
  if (j.contains("counts")) {
    const LatticeConfiguration config = lattice_from_json(j);
    return discrete_full_trajectory(rsk(config), config.theta(), config.k());
  }
  throw JsonSchemaError("json: expected a point configuration or a lattice configuration");
}

int run_trajectory(const TrajectoryOptions& opt) {
  DiagramTrajectory trajectory;
  if (!opt.input.empty()) {
    trajectory = trajectory_of_config(parse_json(read_input(opt.input)));
  } else if (opt.k > 0) {
    const auto config = sample_geometric_lattice(opt.theta, opt.k, RngSpec{opt.seed, opt.stream});
    trajectory = discrete_full_trajectory(rsk(config), opt.theta, opt.k);
  } else {
    trajectory =
        full_trajectory(drs(sample_poisson_square(opt.theta, RngSpec{opt.seed, opt.stream})));
  }
  if (opt.format == "json") {
    write_output(opt.out, trajectory_to_json(trajectory).dump(2) + "\n");
  } else if (opt.format == "csv") {
    write_output(opt.out, line_ensemble_csv(LineEnsemble(trajectory)));
  } else {
    throw std::invalid_argument("trajectory: format must be json or csv");
  }
  return 0;
}

struct ProbOptions {
  std::string input = "-";
  std::string format = "text";
  std::string out = "-";
};

int run_prob(const ProbOptions& opt) {
  const FddQuery query = query_from_json(parse_json(read_input(opt.input)));
  const LogProbability law = query.discrete_k() ? fdd_discrete(query) : fdd_continuous(query);
  std::ostringstream text;
  if (opt.format == "json") {
    nlohmann::json j = {{"log_probability", law.log_value},
                        {"probability", law.probability()},
                        {"exact", nullptr}};
    if (law.has_exact())
      j["exact"] = {{"coefficient", law.exact->coefficient.str()},
                    {"exponent", law.exact->exponent.str()}};
    text << j.dump(2) << "\n";
  } else if (opt.format == "text") {
    text.precision(17);
    text << "log-probability: " << law.log_value << "\n";
    text << "probability: " << law.probability() << "\n";
    if (law.has_exact()) {
      text << "exact: " << law.exact->coefficient.str();
      if (law.exact->exponent != 0) text << " * exp(" << law.exact->exponent.str() << ")";
      text << "\n";
    }
  } else {
    throw std::invalid_argument("prob: format must be text or json");
  }
  write_output(opt.out, text.str());
  return 0;
}

struct LlnOptions {
  std::uint64_t seed = 4;
  std::uint64_t stream = 0;
  double theta = 100.0;
  std::vector<double> taus;
  std::int64_t draws = 20;
  std::string format = "text";
  std::string out = "-";
};

int run_lln(const LlnOptions& opt) {
  const std::vector<double> taus = opt.taus.empty() ? std::vector<double>{0.0, 0.5, -0.5}
                                                    : opt.taus;
  const auto rows = lln_topline(opt.theta, taus, RngSpec{opt.seed, opt.stream},
                                static_cast<int>(opt.draws));
  std::string text;
  if (opt.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows)
      j.push_back({{"tau", row.tau}, {"ratio", row.ratio}, {"target", row.target}});
    text = j.dump(2) + "\n";
  } else if (opt.format == "text") {
    text = "tau ratio target\n";
    char buf[96];
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof(buf), "%g %.6g %.6g\n", row.tau, row.ratio, row.target);
      text += buf;
    }
  } else {
    throw std::invalid_argument("lln: format must be text or json");
  }
  write_output(opt.out, text);
  return 0;
}

struct RenderOptions {
  std::string input = "-";
  int top_lines = 0;
  std::string format = "svg";
  std::string out = "-";
};

int run_render(const RenderOptions& opt) {
  const DiagramTrajectory trajectory = trajectory_from_json(parse_json(read_input(opt.input)));
  if (opt.out != "-") {
    render_ensemble(trajectory, opt.top_lines, opt.format, opt.out);
    return 0;
  }
  if (opt.format == "svg") {
    write_output(opt.out, render_svg(trajectory, opt.top_lines));
  } else if (opt.format == "csv") {
    write_output(opt.out, line_ensemble_csv(LineEnsemble(trajectory)));
  } else {
    throw std::invalid_argument("render: format must be svg or csv");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poissonized Robinson-Schensted process toolkit"};
  app.require_subcommand(1);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "draw seeded configurations as JSON-lines");
  sample_cmd->add_option("--seed", sample.seed, "RNG seed");
  sample_cmd->add_option("--streams", sample.stream, "base RNG stream; sample i uses base + i");
  sample_cmd->add_option("--samples", sample.samples, "number of configurations");
  sample_cmd->add_option("--theta", sample.theta, "time horizon (square side)")->required();
  sample_cmd->add_option("--k", sample.k, "lattice refinement; 0 draws continuous point fields");
  sample_cmd->add_option("--out", sample.out, "output path, - for stdout");

  TrajectoryOptions trajectory;
  auto* trajectory_cmd =
      app.add_subcommand("trajectory", "diagram-valued path of a configuration");
  trajectory_cmd->add_option("input", trajectory.input,
                             "configuration JSON path, - for stdin; omit to draw one");
  trajectory_cmd->add_option("--seed", trajectory.seed, "RNG seed for a fresh draw");
  trajectory_cmd->add_option("--streams", trajectory.stream, "RNG stream for a fresh draw");
  trajectory_cmd->add_option("--theta", trajectory.theta, "time horizon for a fresh draw");
  trajectory_cmd->add_option("--k", trajectory.k, "lattice refinement for a fresh draw");
  trajectory_cmd->add_option("--format", trajectory.format, "json or csv");
  trajectory_cmd->add_option("--out", trajectory.out, "output path, - for stdout");

  ProbOptions prob;
  auto* prob_cmd = app.add_subcommand("prob", "evaluate a pinned-diagram probability");
  prob_cmd->add_option("input", prob.input, "query JSON path, - for stdin");
  prob_cmd->add_option("--format", prob.format, "text or json");
  prob_cmd->add_option("--out", prob.out, "output path, - for stdout");

  std::string verify_config;
  std::optional<std::uint64_t> verify_seed, verify_stream;
  std::optional<double> verify_scale;
  std::optional<int> verify_threads;
  std::optional<std::string> verify_report, verify_figure;
  std::vector<std::string> verify_criteria;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("config", verify_config, "suite config JSON; defaults apply if omitted");
  verify_cmd->add_option("--seed", verify_seed, "override the suite seed");
  verify_cmd->add_option("--streams", verify_stream, "override the base stream");
  verify_cmd->add_option("--scale", verify_scale, "Monte-Carlo sample-count multiplier");
  verify_cmd->add_option("--threads", verify_threads, "worker threads, 0 = hardware");
  verify_cmd->add_option("--report", verify_report, "write the JSON report here");
  verify_cmd->add_option("--figure", verify_figure, "figure output path, empty to skip");
  verify_cmd->add_option("--criterion", verify_criteria, "run only the named criteria");

  LlnOptions lln;
  auto* lln_cmd = app.add_subcommand("lln", "top-line averages against the limiting profile");
  lln_cmd->add_option("--seed", lln.seed, "RNG seed");
  lln_cmd->add_option("--streams", lln.stream, "base RNG stream; draw d uses base + d");
  lln_cmd->add_option("--theta", lln.theta, "time horizon");
  lln_cmd->add_option("--tau", lln.taus, "interior times as fractions of theta, in (-1,1)");
  lln_cmd->add_option("--samples", lln.draws, "number of averaged draws");
  lln_cmd->add_option("--format", lln.format, "text or json");
  lln_cmd->add_option("--out", lln.out, "output path, - for stdout");

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "draw a trajectory's line ensemble");
  render_cmd->add_option("input", render.input, "trajectory JSON path, - for stdin");
  render_cmd->add_option("--top-lines", render.top_lines,
                         "lines to draw, 0 = every non-constant line");
  render_cmd->add_option("--format", render.format, "svg or csv");
  render_cmd->add_option("--out", render.out, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sample_cmd->parsed()) return run_sample(sample);
    if (trajectory_cmd->parsed()) return run_trajectory(trajectory);
    if (prob_cmd->parsed()) return run_prob(prob);
    if (verify_cmd->parsed()) {
      SuiteConfig config;
      if (!verify_config.empty()) config = load_suite_config(verify_config);
      if (verify_seed) config.seed = *verify_seed;
      if (verify_stream) config.stream = *verify_stream;
      if (verify_scale) config.sample_scale = *verify_scale;
      if (verify_threads) config.threads = *verify_threads;
      if (verify_report) config.report_path = *verify_report;
      if (verify_figure) config.figure_path = *verify_figure;
      if (!verify_criteria.empty()) config.criteria = verify_criteria;
      return run_suite(config, std::cout);
    }
    if (lln_cmd->parsed()) return run_lln(lln);
    if (render_cmd->parsed()) return run_render(render);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
