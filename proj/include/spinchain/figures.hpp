#pragma once

#include <string>
#include <vector>

#include "spinchain/analysis.hpp"
#include "spinchain/io.hpp"
#include "spinchain/version.hpp"

namespace spinchain {

// Deterministic CSV reproductions of the published figures. Each id maps to
// a fixed parameter set; steps / t_max / c override the grid where that
// makes sense for the figure.
struct FigureOptions {
  std::string id;       // 1, 2, 3, 4, 5a, 5b, 6, 7
  int steps = 0;        // 0 = figure default
  double t_max = 0.0;   // 0 = figure default
  double c_filter = -1; // figures 1-3: emit only this initial concurrence
  DiscordOptions discord;
};

struct FigureOutput {
  std::string default_filename;
  std::string csv;
};

namespace detail {

inline std::string provenance_header(const std::vector<std::string>& lines) {
  std::string out;
  out += std::string("# spinchain version ") + kVersion + "\n";
  for (const auto& l : lines) out += "# " + l + "\n";
  return out;
}

inline std::vector<double> pick_c_values(const std::vector<double>& defaults, double filter) {
  if (filter < 0) return defaults;
  return {filter};
}

// Time-scan figures: one (t, D, E) series per initial concurrence.
inline FigureOutput time_figure(const std::string& id, int n_sites,
                                const std::vector<double>& c_values, bool eof_first,
                                const FigureOptions& opts) {
  ChainSpec spec{n_sites, 1.0, 0.0};
  const int steps = opts.steps > 0 ? opts.steps : 600;
  const double t_max = opts.t_max > 0 ? opts.t_max : 1.5 * n_sites;
  const auto grid = linspace(0.0, t_max, steps);

  std::string csv = provenance_header(
      {"figure " + id, "n=" + std::to_string(n_sites) + " j=1 h=0 r=" + std::to_string(n_sites),
       "t: " + std::to_string(steps) + " points in [0, " + format_number(t_max) + "]"});
  csv += eof_first ? "c0,t,E,D\n" : "c0,t,D,E\n";
  for (double c0 : c_values) {
    const ScanSeries series = scan_time(spec, pure_state(c0), n_sites, grid, opts.discord);
    for (const auto& p : series.points) {
      const double d = p.report.discord_two_way, e = p.report.eof;
      csv += format_number(c0) + "," + format_number(p.axis_value) + "," +
             (eof_first ? format_number(e) + "," + format_number(d)
                        : format_number(d) + "," + format_number(e)) +
             "\n";
    }
  }
  return {"figure" + id + ".csv", csv};
}

// Amplitude-scan figures: rescaled D and E against |f| for a state family.
inline FigureOutput amplitude_figure(const std::string& id,
                                     const std::vector<std::pair<std::string, XState>>& family,
                                     const std::vector<std::string>& labels_header,
                                     const FigureOptions& opts) {
  const int steps = opts.steps > 0 ? opts.steps : 400;
  const auto grid = linspace(0.0, 1.0, steps);

  std::string csv = provenance_header(
      {"figure " + id, "arg_f=0", "f: " + std::to_string(steps) + " points in [0, 1]"});
  for (const auto& h : labels_header) csv += h;
  for (const auto& [label, state] : family) {
    const AmplitudeScan scan = scan_amplitude(state, grid, 0.0, opts.discord);
    for (size_t i = 0; i < scan.series.points.size(); ++i) {
      csv += label + "," + format_number(scan.series.points[i].axis_value) + "," +
             format_number(scan.discord_tilde(i)) + "," + format_number(scan.eof_tilde(i)) + "\n";
    }
  }
  return {"figure" + id + ".csv", csv};
}

}  // namespace detail

inline FigureOutput emit_figure(const FigureOptions& opts) {
  const std::string& id = opts.id;

  if (id == "1")
    return detail::time_figure(id, 3, detail::pick_c_values({0.1, 0.4, 0.7, 1.0}, opts.c_filter),
                               false, opts);
  if (id == "2")
    return detail::time_figure(id, 50, detail::pick_c_values({0.1, 0.4, 0.7, 1.0}, opts.c_filter),
                               false, opts);
  if (id == "3")
    return detail::time_figure(id, 15, detail::pick_c_values({0.1, 0.6, 1.0}, opts.c_filter),
                               true, opts);

  if (id == "4") {
    std::vector<std::pair<std::string, XState>> family;
    for (double a : {0.4, 0.7, 1.0}) family.emplace_back(format_number(a), mdms_werner(a));
    return detail::amplitude_figure(id, family, {"a,f,D_tilde,E_tilde\n"}, opts);
  }
  if (id == "5a") {
    std::vector<std::pair<std::string, XState>> family;
    for (double a : {0.503, 0.574}) family.emplace_back(format_number(a), mdms_p(a, 0.0));
    return detail::amplitude_figure(id, family, {"a,f,D_tilde,E_tilde\n"}, opts);
  }
  if (id == "5b") {
    std::vector<std::pair<std::string, XState>> family;
    for (auto [a, g] : {std::pair{0.0150, 0.9747}, std::pair{0.1625, 0.7649}})
      family.emplace_back(format_number(a) + "," + format_number(g), mdms_r(a, g));
    return detail::amplitude_figure(id, family, {"a,g,f,D_tilde,E_tilde\n"}, opts);
  }

  if (id == "6") {
    ChainSpec spec{50, 1.0, 0.0};
    const int steps = opts.steps > 0 ? opts.steps : 600;
    const double t_max = opts.t_max > 0 ? opts.t_max : 75.0;
    const auto grid = linspace(0.0, t_max, steps);
    const XState input = mmm_state(0.53, 0.340, 0.035);

    std::string csv = detail::provenance_header(
        {"figure 6", "n=50 j=1 r=50 input=mmm:0.53,0.340,0.035",
         "t: " + std::to_string(steps) + " points in [0, " + format_number(t_max) + "]"});
    csv += "h_over_j,t,D\n";
    for (double h : {0.0, 0.5, 1.0, 5.0}) {
      spec.field = h;
      const ScanSeries series = scan_time(spec, input, 50, grid, opts.discord);
      for (const auto& p : series.points)
        csv += format_number(h) + "," + format_number(p.axis_value) + "," +
               format_number(p.report.discord_two_way) + "\n";
    }
    return {"figure6.csv", csv};
  }

  if (id == "7") {
    ChainSpec spec{3, 1.0, 0.0};
    const int steps = opts.steps > 0 ? opts.steps : 600;
    const double t_max = opts.t_max > 0 ? opts.t_max : 4.5;
    const auto grid = linspace(0.0, t_max, steps);
    const XState input = mmm_state(1.0, 0.0, 0.0);

    std::string csv = detail::provenance_header(
        {"figure 7", "n=3 j=1 r=3 input=mmm:1,0,0",
         "t: " + std::to_string(steps) + " points in [0, " + format_number(t_max) + "]"});
    csv += "h_over_j,t,D,abs_f\n";
    for (double h : {0.0, 2.0}) {
      spec.field = h;
      const ScanSeries series = scan_time(spec, input, 3, grid, opts.discord);
      for (size_t i = 0; i < series.points.size(); ++i) {
        const double abs_f = transition_amplitude(spec, 3, grid[i]).magnitude();
        csv += format_number(h) + "," + format_number(grid[i]) + "," +
               format_number(series.points[i].report.discord_two_way) + "," +
               format_number(abs_f) + "\n";
      }
    }
    return {"figure7.csv", csv};
  }

  throw std::domain_error("emit_figure: unknown figure id '" + id + "'");
}

}  // namespace spinchain
