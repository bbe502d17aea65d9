#pragma once

#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spinchain/channel.hpp"
#include "spinchain/correlations.hpp"

namespace spinchain {

struct ScanPoint {
  double axis_value = 0;
  CorrelationReport report;
};

struct ScanSeries {
  std::string axis_label;  // "time in 1/J" or "amplitude |f|"
  std::vector<ScanPoint> points;
};

namespace detail {

inline void check_grid(const std::vector<double>& grid, const char* who) {
  if (grid.empty()) throw std::domain_error(std::string(who) + ": grid must be nonempty");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error(std::string(who) + ": grid must be strictly increasing");
}

// Evaluates fn(i) for i in [0, n), optionally across SPINCHAIN_THREADS
// workers. Each index owns its output slot, so results do not depend on
// scheduling.
template <typename Fn>
void for_each_index(size_t n, const Fn& fn) {
  int threads = 1;
  if (const char* env = std::getenv("SPINCHAIN_THREADS")) {
    threads = std::atoi(env);
    if (threads < 1) threads = 1;
  }
  if (threads == 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const size_t stride = threads;
  for (size_t w = 0; w < stride; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t i = w; i < n; i += stride) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// Default transport window: 600 points over [0, 3N/(2J)], wide enough to
// cover the first arrival at t ~ N/(2J) and the revivals after it.
inline std::vector<double> default_time_grid(const ChainSpec& spec, int n_points = 600) {
  spec.validate();
  if (n_points < 1) throw std::domain_error("default_time_grid: need at least one point");
  const double t_max = 1.5 * spec.n_sites / spec.coupling;
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i)
    grid[i] = n_points == 1 ? 0.0 : t_max * i / (n_points - 1);
  return grid;
}

inline std::vector<double> linspace(double lo, double hi, int n_points) {
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i)
    grid[i] = n_points == 1 ? lo : lo + (hi - lo) * i / (n_points - 1);
  return grid;
}

// Full correlation report of the evolved pair at every grid time.
inline ScanSeries scan_time(const ChainSpec& spec, const XState& input, int r,
                            const std::vector<double>& t_grid,
                            const DiscordOptions& opts = {}) {
  detail::check_grid(t_grid, "scan_time");
  input.validate();
  ScanSeries series{"time in 1/J", std::vector<ScanPoint>(t_grid.size())};
  detail::for_each_index(t_grid.size(), [&](size_t i) {
    series.points[i] = {t_grid[i], full_report(evolve_at_time(spec, input, r, t_grid[i]), opts)};
  });
  return series;
}

// |f|-parameterized scan with measures rescaled by their initial values.
// A vanishing initial measure switches the series to raw values.
struct AmplitudeScan {
  ScanSeries series;
  bool rescaled = false;
  double discord_reference = 1.0;
  double eof_reference = 1.0;

  double discord_tilde(size_t i) const {
    return series.points[i].report.discord_two_way / discord_reference;
  }
  double eof_tilde(size_t i) const { return series.points[i].report.eof / eof_reference; }
};

inline AmplitudeScan scan_amplitude(const XState& input, const std::vector<double>& f_grid,
                                    double arg_f = 0.0, const DiscordOptions& opts = {},
                                    bool rescale = true) {
  detail::check_grid(f_grid, "scan_amplitude");
  if (f_grid.front() < 0.0 || f_grid.back() > 1.0 + 1e-12)
    throw std::domain_error("scan_amplitude: |f| grid must lie in [0, 1]");
  input.validate();

  AmplitudeScan scan;
  scan.series.axis_label = "amplitude |f|";
  scan.series.points.resize(f_grid.size());
  detail::for_each_index(f_grid.size(), [&](size_t i) {
    const cxd f = std::polar(std::min(f_grid[i], 1.0), arg_f);
    scan.series.points[i] = {f_grid[i], full_report(evolve_pair(input, f), opts)};
  });

  if (rescale) {
    const CorrelationReport initial = full_report(input, opts);
    if (initial.discord_two_way > 1e-12 && initial.eof > 1e-12) {
      scan.rescaled = true;
      scan.discord_reference = initial.discord_two_way;
      scan.eof_reference = initial.eof;
    }
  }
  return scan;
}

// Bounds on |f|^2 below which each concurrence branch of the evolved state
// is dead. When p3 p4 = 0 the bounds degenerate and the concurrence obeys
// the scaling law C(f) = |f| C(0) instead.
struct EsdThresholds {
  std::optional<double> threshold_14;
  std::optional<double> threshold_23;
  bool scaling_law = false;
};

inline EsdThresholds esd_threshold(const XState& x) {
  x.validate();
  EsdThresholds out;
  const double denom = x.p3 * x.p4;
  if (denom <= 0.0) {
    out.scaling_law = true;
    return out;
  }
  out.threshold_14 = 1.0 - (std::norm(x.c14) - x.p2 * x.p3) / denom;
  out.threshold_23 = 1.0 - (std::norm(x.c23) - x.p1 * x.p4) / denom;
  return out;
}

// Structural zero-discord classes of X states.
enum class ZeroDiscordClass {
  diagonal_cc,       // no coherences at all: D_ab = D_ba = 0
  quantum_classical, // classical on side B: D_ab = 0, D_ba != 0
  classical_quantum, // classical on side A: D_ba = 0, D_ab != 0
  symmetric_zero,    // uniform populations with |c14| = |c23|: both vanish
  nonzero
};

inline const char* to_string(ZeroDiscordClass c) {
  switch (c) {
    case ZeroDiscordClass::diagonal_cc: return "diagonal_cc";
    case ZeroDiscordClass::quantum_classical: return "quantum_classical";
    case ZeroDiscordClass::classical_quantum: return "classical_quantum";
    case ZeroDiscordClass::symmetric_zero: return "symmetric_zero";
    case ZeroDiscordClass::nonzero: return "nonzero";
  }
  return "nonzero";
}

// Tags a state by the structural equalities and cross-checks the tag
// against numerically computed one-way discords.
inline ZeroDiscordClass classify_zero_discord(const XState& x, const DiscordOptions& opts = {}) {
  x.validate();
  const double tol = 1e-10;
  const double m14 = std::abs(x.c14), m23 = std::abs(x.c23);

  ZeroDiscordClass tag = ZeroDiscordClass::nonzero;
  if (m14 <= tol && m23 <= tol) {
    tag = ZeroDiscordClass::diagonal_cc;
  } else if (std::abs(x.p1 - 0.25) <= tol && std::abs(x.p2 - 0.25) <= tol &&
             std::abs(x.p3 - 0.25) <= tol && std::abs(x.p4 - 0.25) <= tol &&
             std::abs(m14 - m23) <= tol) {
    tag = ZeroDiscordClass::symmetric_zero;
  } else if (std::abs(x.p1 - x.p2) <= tol && std::abs(x.p3 - x.p4) <= tol &&
             std::abs(m14 - m23) <= tol) {
    tag = ZeroDiscordClass::quantum_classical;
  } else if (std::abs(x.p1 - x.p3) <= tol && std::abs(x.p2 - x.p4) <= tol &&
             std::abs(m14 - m23) <= tol) {
    tag = ZeroDiscordClass::classical_quantum;
  }

  const DensityMatrix2Q rho = x_to_dense(x);
  const double d_ab = discord_one_way(rho, MeasuredSide::B, opts);
  const double d_ba = discord_one_way(rho, MeasuredSide::A, opts);
  const double check = 1e-6;
  bool ok = true;
  switch (tag) {
    case ZeroDiscordClass::diagonal_cc:
    case ZeroDiscordClass::symmetric_zero:
      ok = d_ab <= check && d_ba <= check;
      break;
    case ZeroDiscordClass::quantum_classical:
      ok = d_ab <= check;
      break;
    case ZeroDiscordClass::classical_quantum:
      ok = d_ba <= check;
      break;
    case ZeroDiscordClass::nonzero:
      break;
  }
  if (!ok)
    throw consistency_error("classify_zero_discord: structural tag contradicts numeric discord");
  return tag;
}

// Smallest |f|* in (0, 1) where the rescaled EoF overtakes the rescaled
// discord, located by bracketing on a coarse grid and bisecting the sign
// change of D-tilde - E-tilde. nullopt when no crossing exists.
inline std::optional<double> crossover_amplitude(const XState& input, double arg_f = 0.0,
                                                 const DiscordOptions& opts = {}) {
  input.validate();
  const CorrelationReport initial = full_report(input, opts);
  if (initial.discord_two_way <= 1e-12 || initial.eof <= 1e-12) return std::nullopt;
  const double d0 = initial.discord_two_way, e0 = initial.eof;

  const auto gap = [&](double fmag) {
    const CorrelationReport rep = full_report(evolve_pair(input, std::polar(fmag, arg_f)), opts);
    return rep.discord_two_way / d0 - rep.eof / e0;
  };

  // Bracket on 200 points; the gap can change sign repeatedly near |f| = 1.
  const int n = 200;
  double prev_f = 0.005, prev_g = gap(prev_f);
  for (int i = 1; i < n; ++i) {
    const double fmag = 0.005 + (0.9995 - 0.005) * i / (n - 1);
    const double g = gap(fmag);
    if (prev_g > 0.0 && g <= 0.0) {
      double lo = prev_f, hi = fmag;
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_f = fmag;
    prev_g = g;
  }
  return std::nullopt;
}

struct FieldBoundResult {
  bool holds = false;
  double max_violation = 0;  // largest D(h=0) - D(h) over the grid
};

// Verifies that the discord transported with the field on never drops
// below the field-free value, pointwise on the time grid.
inline FieldBoundResult field_lower_bound_check(const ChainSpec& spec_with_field,
                                                const XState& input,
                                                const std::vector<double>& t_grid,
                                                const DiscordOptions& opts = {}) {
  detail::check_grid(t_grid, "field_lower_bound_check");
  input.validate();
  if (std::abs(input.p1 - input.p4) > 1e-9 || std::abs(input.p2 - input.p3) > 1e-9)
    throw std::domain_error("field_lower_bound_check: input must have maximally mixed marginals");

  ChainSpec spec_zero = spec_with_field;
  spec_zero.field = 0.0;
  const int r = spec_with_field.n_sites;

  std::vector<double> d_field(t_grid.size()), d_zero(t_grid.size());
  detail::for_each_index(t_grid.size(), [&](size_t i) {
    d_field[i] =
        discord_two_way(x_to_dense(evolve_at_time(spec_with_field, input, r, t_grid[i])), opts);
    d_zero[i] =
        discord_two_way(x_to_dense(evolve_at_time(spec_zero, input, r, t_grid[i])), opts);
  });

  FieldBoundResult out;
  for (size_t i = 0; i < t_grid.size(); ++i)
    out.max_violation = std::max(out.max_violation, d_zero[i] - d_field[i]);
  out.holds = out.max_violation <= 1e-7;
  return out;
}

// Pauli expectation values, sigma_z |up> = +|up>.
struct PauliObservables {
  double sx_sx = 0;   // <sigma_x (x) sigma_x>
  double sy_sx = 0;   // <sigma_y (x) sigma_x>
  double sz_a = 0;    // local magnetization of the chain-side qubit
  double sz_b = 0;    // local magnetization of spin 0
};

inline PauliObservables observables(const XState& x) {
  x.validate();
  PauliObservables o;
  const cxd z = x.c14 + x.c23;
  o.sx_sx = 2.0 * z.real();
  o.sy_sx = 2.0 * z.imag();
  o.sz_a = (x.p3 + x.p4) - (x.p1 + x.p2);
  o.sz_b = (x.p2 + x.p4) - (x.p1 + x.p3);
  return o;
}

// Predicted |f|^2 at which a quantum-classical input (populations p1 = p2,
// p3 = p4, |c14| = |c23|, p1 < 1/4) evolves into a classical-classical
// state: the damped populations all reach 1/4 at |f|^2 = 1/2 + p1/(1-2p1).
// The audit discords are computed at that channel strength.
struct ClassicalDeathPrediction {
  double f_squared = 0;
  double audit_discord_ab = 0;
  double audit_discord_ba = 0;
};

inline ClassicalDeathPrediction classical_classical_death_time(const XState& x,
                                                               const DiscordOptions& opts = {}) {
  x.validate();
  const double tol = 1e-9;
  if (std::abs(x.p1 - x.p2) > tol || std::abs(x.p3 - x.p4) > tol ||
      std::abs(std::abs(x.c14) - std::abs(x.c23)) > tol)
    throw std::domain_error("classical_classical_death_time: input is not quantum-classical");
  if (!(x.p1 < 0.25 - 1e-12))
    throw std::domain_error("classical_classical_death_time: requires p1 < 1/4");

  ClassicalDeathPrediction out;
  out.f_squared = 0.5 + x.p1 / (1.0 - 2.0 * x.p1);
  const XState evolved = evolve_pair(x, std::sqrt(std::min(out.f_squared, 1.0)));
  const DensityMatrix2Q rho = x_to_dense(evolved);
  out.audit_discord_ab = discord_one_way(rho, MeasuredSide::B, opts);
  out.audit_discord_ba = discord_one_way(rho, MeasuredSide::A, opts);
  return out;
}

}  // namespace spinchain
