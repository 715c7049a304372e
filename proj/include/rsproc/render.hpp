#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsproc/partition.hpp"
#include "rsproc/trajectory.hpp"

namespace rsproc {

namespace detail {

inline std::string fmt_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

// Step-function SVG of the line ensemble M(i;t) = row_i(t) - i + 1 for lines
// 1..top_lines (all non-constant lines when top_lines = 0), time across
// [-theta, theta]. Each line is one <path class="line">: horizontal segments
// between change times with vertical connectors at the changes, so the left
// branch reads right-continuous and the right branch left-continuous, exactly
// like the trajectory event semantics.
inline std::string render_svg(const DiagramTrajectory& trajectory, int top_lines = 0) {
  if (top_lines < 0) throw std::invalid_argument("render_svg: top_lines must be non-negative");
  const double theta = trajectory.theta();
  int max_rows = 0;
  for (const auto& event : trajectory.events())
    max_rows = std::max(max_rows, event.diagram.num_rows());
  const int lines = top_lines > 0 ? top_lines : max_rows;

  // per-line step points (time, new value), starting implicitly at 1 - i
  std::vector<std::vector<std::pair<double, long long>>> steps(
      static_cast<std::size_t>(lines));
  YoungDiagram prev;
  for (const auto& event : trajectory.events()) {
    for (int i = 1; i <= lines; ++i) {
      const long long v = event.diagram.row_or_zero(i - 1) - i + 1;
      if (v != prev.row_or_zero(i - 1) - i + 1)
        steps[static_cast<std::size_t>(i - 1)].push_back({event.time, v});
    }
    prev = event.diagram;
  }

  long long vmin = lines > 0 ? 1 - lines : -1;
  long long vmax = 1;
  for (const auto& line : steps)
    for (const auto& [t, v] : line) {
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  vmin -= 1;
  vmax += 1;

  constexpr double kWidth = 900, kHeight = 600;
  constexpr double kLeft = 62, kRight = 878, kTop = 24, kBottom = 556;
  const auto x_of = [&](double t) { return kLeft + (t + theta) / (2 * theta) * (kRight - kLeft); };
  const auto y_of = [&](double v) {
    return kTop + (static_cast<double>(vmax) - v) /
                      static_cast<double>(vmax - vmin) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + detail::fmt_num(kWidth) +
         " " + detail::fmt_num(kHeight) + "\" width=\"900\" height=\"600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"900\" height=\"600\" fill=\"white\"/>\n";

  // frame and zero level
  svg += "<rect x=\"" + detail::fmt_num(kLeft) + "\" y=\"" + detail::fmt_num(kTop) +
         "\" width=\"" + detail::fmt_num(kRight - kLeft) + "\" height=\"" +
         detail::fmt_num(kBottom - kTop) + "\" fill=\"none\" stroke=\"#333\"/>\n";
  if (vmin < 0 && vmax > 0)
    svg += "<line class=\"zero\" x1=\"" + detail::fmt_num(kLeft) + "\" y1=\"" +
           detail::fmt_num(y_of(0)) + "\" x2=\"" + detail::fmt_num(kRight) + "\" y2=\"" +
           detail::fmt_num(y_of(0)) + "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";

  // ticks: five across time, about eight up the values
  for (int i = 0; i <= 4; ++i) {
    const double t = -theta + i * theta / 2;
    svg += "<line x1=\"" + detail::fmt_num(x_of(t)) + "\" y1=\"" + detail::fmt_num(kBottom) +
           "\" x2=\"" + detail::fmt_num(x_of(t)) + "\" y2=\"" + detail::fmt_num(kBottom + 6) +
           "\" stroke=\"#333\"/>\n";
    svg += "<text class=\"tick\" x=\"" + detail::fmt_num(x_of(t)) + "\" y=\"" +
           detail::fmt_num(kBottom + 22) +
           "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#333\">" + detail::fmt_num(t) +
           "</text>\n";
  }
  const long long y_step = std::max<long long>(1, (vmax - vmin) / 8);
  for (long long v = vmin - (vmin % y_step); v <= vmax; v += y_step) {
    if (v < vmin) continue;
    svg += "<line x1=\"" + detail::fmt_num(kLeft - 6) + "\" y1=\"" + detail::fmt_num(y_of(v)) +
           "\" x2=\"" + detail::fmt_num(kLeft) + "\" y2=\"" + detail::fmt_num(y_of(v)) +
           "\" stroke=\"#333\"/>\n";
    svg += "<text class=\"tick\" x=\"" + detail::fmt_num(kLeft - 10) + "\" y=\"" +
           detail::fmt_num(y_of(v) + 4) +
           "\" font-size=\"13\" text-anchor=\"end\" fill=\"#333\">" +
           std::to_string(v) + "</text>\n";
  }

  static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  for (int i = 1; i <= lines; ++i) {
    const auto& line = steps[static_cast<std::size_t>(i - 1)];
    std::string d = "M " + detail::fmt_num(x_of(-theta)) + " " +
                    detail::fmt_num(y_of(static_cast<double>(1 - i)));
    for (const auto& [t, v] : line)
      d += " H " + detail::fmt_num(x_of(t)) + " V " + detail::fmt_num(y_of(static_cast<double>(v)));
    d += " H " + detail::fmt_num(x_of(theta));
    svg += "<path class=\"line\" d=\"" + d + "\" fill=\"none\" stroke=\"" +
           kPalette[static_cast<std::size_t>((i - 1) % 8)] + "\" stroke-width=\"1.4\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

// Renders a trajectory to `out` as either the SVG above or the line-change
// CSV (which round-trips through trajectory_from_line_csv).
inline void render_ensemble(const DiagramTrajectory& trajectory, int top_lines,
                            const std::string& format, const std::string& out) {
  std::string payload;
  if (format == "svg")
    payload = render_svg(trajectory, top_lines);
  else if (format == "csv")
    payload = line_ensemble_csv(LineEnsemble(trajectory));
  else
    throw std::invalid_argument("render_ensemble: format must be svg or csv");
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("render_ensemble: cannot open " + out);
  file << payload;
  if (!file.flush()) throw std::runtime_error("render_ensemble: write failed for " + out);
}

}  // namespace rsproc
