// Command-line front end: transition amplitudes, correlation reports,
// figure reproductions and the built-in selftest, all emitting CSV/JSON.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinchain/spinchain.hpp"

namespace {

using namespace spinchain;

// Parses "family:params" (pure:C, werner:a, mdms-p:a,g, mdms-r:a,g,
// mmm:cx,cy,cz) into a state.
XState parse_state_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::domain_error("state spec must look like family:params");
  const std::string family = spec.substr(0, colon);

  std::vector<double> params;
  std::string rest = spec.substr(colon + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t next = rest.find(',', pos);
    if (next == std::string::npos) next = rest.size();
    params.push_back(std::stod(rest.substr(pos, next - pos)));
    pos = next + 1;
  }

  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::domain_error("state family '" + family + "' expects " + std::to_string(n) +
                              " parameter(s)");
  };
  if (family == "pure") {
    need(1);
    return pure_state(params[0]);
  }
  if (family == "werner") {
    need(1);
    return mdms_werner(params[0]);
  }
  if (family == "mdms-p") {
    need(2);
    return mdms_p(params[0], params[1]);
  }
  if (family == "mdms-r") {
    need(2);
    return mdms_r(params[0], params[1]);
  }
  if (family == "mmm") {
    need(3);
    return mmm_state(params[0], params[1], params[2]);
  }
  throw std::domain_error("unknown state family '" + family + "'");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
}

struct AmplitudeArgs {
  int n = 2;
  double j = 1.0, h = 0.0;
  int r = 0;  // 0 = last site
  double t = -1.0;
  double t_min = 0.0, t_max = -1.0;
  int steps = 200;
  std::string output;
};

int run_amplitude(const AmplitudeArgs& a) {
  ChainSpec spec{a.n, a.j, a.h};
  const int r = a.r == 0 ? a.n : a.r;

  std::vector<double> times;
  if (a.t >= 0.0)
    times.push_back(a.t);
  else if (a.t_max >= 0.0)
    times = linspace(a.t_min, a.t_max, a.steps);
  else
    throw std::domain_error("amplitude: give --t or --t-max");

  std::string csv;
  csv += std::string("# spinchain version ") + kVersion + "\n";
  csv += "# amplitude n=" + std::to_string(spec.n_sites) + " j=" + format_number(spec.coupling) +
         " h=" + format_number(spec.field) + " r=" + std::to_string(r) + "\n";
  csv += "t,re_f,im_f,abs_f\n";
  for (double t : times) {
    const cxd f = transition_amplitude(spec, r, t).value;
    csv += format_number(t) + "," + format_number(f.real()) + "," + format_number(f.imag()) +
           "," + format_number(std::abs(f)) + "\n";
  }
  write_output(a.output, csv);
  return 0;
}

struct ReportArgs {
  std::string state_spec;
  std::string state_json;
  double f = -1.0;
  double arg_f = 0.0;
  int n = 0;
  int r = 0;
  double t = -1.0;
  double j = 1.0, h = 0.0;
};

int run_report(const ReportArgs& a) {
  std::optional<XState> x;
  std::optional<DensityMatrix2Q> dense;
  if (!a.state_spec.empty() && !a.state_json.empty())
    throw std::domain_error("report: give --state or --state-json, not both");
  if (!a.state_spec.empty()) {
    x = parse_state_spec(a.state_spec);
  } else if (!a.state_json.empty()) {
    const json parsed = json::parse(a.state_json);
    if (parsed.contains("entries"))
      dense = dense_from_json(parsed);
    else
      x = xstate_from_json(parsed);
  } else {
    throw std::domain_error("report: a state is required (--state or --state-json)");
  }

  if (a.f >= 0.0 && a.t >= 0.0)
    throw std::domain_error("report: give --f or (--n, --t), not both");
  if (a.f >= 0.0 || a.t >= 0.0) {
    if (!x) throw std::domain_error("report: evolution requires an X-state input");
    if (a.f >= 0.0) {
      x = evolve_pair(*x, std::polar(a.f, a.arg_f));
    } else {
      if (a.n < 2) throw std::domain_error("report: evolution in time requires --n");
      ChainSpec spec{a.n, a.j, a.h};
      x = evolve_at_time(spec, *x, a.r == 0 ? a.n : a.r, a.t);
    }
  }

  const CorrelationReport rep = x ? full_report(*x) : full_report(*dense);
  std::cout << to_json(rep).dump(2) << "\n";
  return 0;
}

struct FigureArgs {
  std::string id;
  std::string output;
  int steps = 0;
  double t_max = 0.0;
  double c = -1.0;
};

int run_figure(const FigureArgs& a) {
  FigureOptions opts;
  opts.id = a.id;
  opts.steps = a.steps;
  opts.t_max = a.t_max;
  opts.c_filter = a.c;
  const FigureOutput fig = emit_figure(opts);
  write_output(a.output.empty() ? fig.default_filename : a.output, fig.csv);
  if (!a.output.empty() && a.output != "-")
    std::cerr << "wrote " << a.output << "\n";
  else if (a.output.empty())
    std::cerr << "wrote " << fig.default_filename << "\n";
  return 0;
}

struct SelftestArgs {
  bool full = false;
  std::string inject_fault;
};

int run_selftest(const SelftestArgs& a) {
  acceptance::Options opts;
  opts.reduced = !a.full;
  opts.inject_fault = a.inject_fault;
  const auto results = acceptance::run_all(opts);
  std::cout << acceptance::summarize(results);
  return acceptance::count_failures(results) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinchain: two-qubit correlation transport across XX spin chains"};
  app.require_subcommand(1);
  // --h is the magnetic field, so help loses its short form
  app.set_help_flag("--help", "print help");

  AmplitudeArgs amp;
  CLI::App* amp_cmd = app.add_subcommand(
      "amplitude", "Single-excitation transition amplitudes f_r(t) as CSV");
  amp_cmd->set_help_flag("--help", "print help");
  amp_cmd->add_option("--n", amp.n, "chain length")->required()->check(CLI::Range(2, 2000));
  amp_cmd->add_option("--j", amp.j, "coupling J")->check(CLI::PositiveNumber);
  amp_cmd->add_option("--h", amp.h, "uniform field h");
  amp_cmd->add_option("--r", amp.r, "target site (default: last)");
  amp_cmd->add_option("--t", amp.t, "single time (units of 1/J)");
  amp_cmd->add_option("--t-min", amp.t_min, "range start");
  amp_cmd->add_option("--t-max", amp.t_max, "range end");
  amp_cmd->add_option("--steps", amp.steps, "rows in the range")->check(CLI::Range(1, 1000000));
  amp_cmd->add_option("--output", amp.output, "CSV path ('-' or empty = stdout)");

  ReportArgs rpt;
  CLI::App* rpt_cmd = app.add_subcommand(
      "report", "Correlation report (entropies, discord, EoF) as JSON");
  rpt_cmd->set_help_flag("--help", "print help");
  rpt_cmd->add_option("--state", rpt.state_spec,
                      "family:params (pure:C, werner:a, mdms-p:a,g, mdms-r:a,g, mmm:cx,cy,cz)");
  rpt_cmd->add_option("--state-json", rpt.state_json, "inline JSON state");
  rpt_cmd->add_option("--f", rpt.f, "channel amplitude |f| in [0, 1]");
  rpt_cmd->add_option("--arg-f", rpt.arg_f, "phase of f (radians)");
  rpt_cmd->add_option("--n", rpt.n, "chain length for time evolution");
  rpt_cmd->add_option("--r", rpt.r, "target site (default: last)");
  rpt_cmd->add_option("--t", rpt.t, "evolution time (units of 1/J)");
  rpt_cmd->add_option("--j", rpt.j, "coupling J")->check(CLI::PositiveNumber);
  rpt_cmd->add_option("--h", rpt.h, "uniform field h");

  FigureArgs fig;
  CLI::App* fig_cmd = app.add_subcommand("figure", "Reproduce a figure dataset as CSV");
  fig_cmd->set_help_flag("--help", "print help");
  fig_cmd->add_option("id", fig.id, "figure id: 1, 2, 3, 4, 5a, 5b, 6, 7")->required();
  fig_cmd->add_option("--output", fig.output, "CSV path (default figure<id>.csv)");
  fig_cmd->add_option("--steps", fig.steps, "grid points");
  fig_cmd->add_option("--t-max", fig.t_max, "time window (time figures)");
  fig_cmd->add_option("--c", fig.c, "emit a single initial concurrence (figures 1-3)");

  SelftestArgs st;
  CLI::App* st_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  st_cmd->set_help_flag("--help", "print help");
  st_cmd->add_flag("--full", st.full, "full grids instead of the reduced ones");
  st_cmd->add_option("--inject-fault", st.inject_fault,
                     "force the named check to fail (harness test mode)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*amp_cmd) return run_amplitude(amp);
    if (*rpt_cmd) return run_report(rpt);
    if (*fig_cmd) return run_figure(fig);
    if (*st_cmd) return run_selftest(st);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
