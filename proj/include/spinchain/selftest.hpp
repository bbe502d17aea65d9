#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "spinchain/analysis.hpp"
#include "spinchain/channel.hpp"
#include "spinchain/correlations.hpp"
#include "spinchain/figures.hpp"
#include "spinchain/io.hpp"

namespace spinchain::acceptance {

// The acceptance checks pin every tolerance in code. `reduced` shrinks grid
// and sample sizes (for the CLI selftest) without touching tolerances.
// `inject_fault` names a check that is forced to fail, to prove the harness
// actually reports failures.
struct Options {
  bool reduced = false;
  std::string inject_fault;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

using clock = std::chrono::steady_clock;

inline double seconds_since(clock::time_point start) {
  return std::chrono::duration<double>(clock::now() - start).count();
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
};

inline XState random_xstate(Rng& rng) {
  double p[4];
  double sum = 0;
  for (double& v : p) {
    v = -std::log(rng.uniform(1e-12, 1.0));
    sum += v;
  }
  for (double& v : p) v /= sum;
  XState x{p[0], p[1], p[2], p[3], 0.0, 0.0};
  x.c14 = std::polar(rng.uniform() * std::sqrt(x.p1 * x.p4), rng.uniform(0.0, 2 * kPi));
  x.c23 = std::polar(rng.uniform() * std::sqrt(x.p2 * x.p3), rng.uniform(0.0, 2 * kPi));
  return x;
}

inline XState random_entangled_xstate(Rng& rng, double min_concurrence = 1e-3,
                                      double min_p3p4 = 1e-6) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    XState x = random_xstate(rng);
    if (x.p3 * x.p4 > min_p3p4 && concurrence_x(x) > min_concurrence) return x;
  }
  throw consistency_error("random_entangled_xstate: rejection sampling exhausted");
}

// Exhaustive grid plus a shrinking-box local refinement started from the
// best few well-separated grid points. Used as the independent reference
// the simplex optimizer is judged against.
inline double discord_grid_polished(const DensityMatrix2Q& rho, MeasuredSide side, int n_theta,
                                    int n_phi) {
  const spinchain::detail::ConditionalEntropy f(rho, side);
  struct Cell {
    double th, ph, h;
  };
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double th = kPi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double ph = 2.0 * kPi * j / n_phi;
      cells.push_back({th, ph, f(th, ph)});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.h < b.h; });

  // Keep the best points that are at least a few cells apart, so distinct
  // basins each get a polish pass.
  const double dth0 = kPi / (n_theta - 1), dph0 = 2.0 * kPi / n_phi;
  std::vector<Cell> starts;
  for (const Cell& c : cells) {
    bool fresh = true;
    for (const Cell& s : starts) {
      const double dphi = std::remainder(c.ph - s.ph, 2.0 * kPi);
      if (std::abs(c.th - s.th) < 4 * dth0 && std::abs(dphi) < 4 * dph0) fresh = false;
    }
    if (fresh) starts.push_back(c);
    if (starts.size() == 4) break;
  }

  double best_h = cells.front().h;
  for (const Cell& start : starts) {
    double th0 = start.th, ph0 = start.ph, h0 = start.h;
    double dth = dth0, dph = dph0;
    for (int iter = 0; iter < 48; ++iter) {
      double next_th = th0, next_ph = ph0;
      for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
          if (a == 0 && b == 0) continue;
          const double th = th0 + a * dth / 3.0;
          const double ph = ph0 + b * dph / 3.0;
          const double h = f(th, ph);
          if (h < h0) {
            h0 = h;
            next_th = th;
            next_ph = ph;
          }
        }
      th0 = next_th;
      ph0 = next_ph;
      dth *= 0.7;
      dph *= 0.7;
    }
    best_h = std::min(best_h, h0);
  }

  const Mat2 measured = side == MeasuredSide::B ? rho.marginal_b() : rho.marginal_a();
  return std::max(0.0, von_neumann_entropy(measured) - von_neumann_entropy(rho) + best_h);
}

struct Reporter {
  CheckResult result;
  bool fault = false;

  Reporter(std::string name, const Options& opts) {
    result.name = std::move(name);
    result.passed = true;
    fault = opts.inject_fault == result.name;
  }

  // Records "measured must stay within tol"; keeps the worst case in the
  // detail string.
  void require_leq(const std::string& label, double measured, double tol) {
    if (!(measured <= tol)) result.passed = false;
    result.detail += (result.detail.empty() ? "" : "; ") + label + "=" +
                     format_number(measured + 0.0) + " (tol " + format_number(tol) + ")";
  }

  void require(const std::string& label, bool ok) {
    if (!ok) result.passed = false;
    result.detail += (result.detail.empty() ? "" : "; ") + label + "=" + (ok ? "yes" : "NO");
  }

  CheckResult finish() {
    if (fault) {
      result.passed = false;
      result.detail += " [fault injected]";
    }
    return result;
  }
};

// --- check 1: closed-form amplitudes match the dense propagator ---
inline CheckResult check_amplitude_oracle(const Options& opts) {
  Reporter rep("1-amplitude-oracle", opts);
  const auto start = clock::now();
  Rng rng(101);

  const std::vector<int> sizes = opts.reduced ? std::vector<int>{2, 3, 15}
                                              : std::vector<int>{2, 3, 5, 15, 50};
  const double fields[] = {0.0, 0.5, -0.8, 1.7, 3.1};
  const int samples = opts.reduced ? 20 : 100;

  double worst = 0;
  size_t field_idx = 0;
  for (int n : sizes) {
    const ChainSpec spec{n, 1.0, fields[field_idx++ % 5]};
    for (int s = 0; s < samples; ++s) {
      const double t = rng.uniform(0.0, 100.0);
      const Eigen::MatrixXcd u = propagator_oracle(spec, t);
      const auto amps = transition_amplitudes_all(spec, t);
      for (int r = 1; r <= n; ++r)
        worst = std::max(worst, std::abs(amps[r - 1].value - u(r - 1, 0)));
    }
  }
  rep.require_leq("max|closed-oracle|", worst, 1e-9);
  rep.require_leq("runtime_s", seconds_since(start), 10.0);
  return rep.finish();
}

// --- check 2: perfect transfer across the three-site chain ---
inline CheckResult check_perfect_transfer(const Options& opts) {
  Reporter rep("2-perfect-transfer-n3", opts);
  const ChainSpec bare{3, 1.0, 0.0};

  // Locate the transfer time from the oracle, then refine by golden section.
  auto oracle_mag = [&bare](double t) {
    return std::abs(propagator_oracle(bare, t)(2, 0));
  };
  double t_star = 0, best = -1;
  for (int i = 0; i <= 2000; ++i) {
    const double t = 10.0 * i / 2000;
    const double m = oracle_mag(t);
    if (m > best) {
      best = m;
      t_star = t;
    }
  }
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = t_star - 0.01, hi = t_star + 0.01;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = oracle_mag(x1), f2 = oracle_mag(x2);
  for (int i = 0; i < 80; ++i) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = oracle_mag(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = oracle_mag(x1);
    }
  }
  t_star = 0.5 * (lo + hi);

  const cxd f_bare = transition_amplitude(bare, 3, t_star).value;
  rep.require_leq("|1-max|f3||", std::abs(1.0 - std::abs(f_bare)), 1e-6);

  // The bare transfer amplitude carries a phase; a uniform field with
  // 2 h t* = arg f rotates it onto +1 so the transferred state can be
  // compared with the input directly.
  const double h_null = std::arg(f_bare) / (2.0 * t_star);
  const ChainSpec tuned{3, 1.0, h_null};
  double worst_dist = 0, worst_measure = 0;
  for (double c0 : {0.1, 0.4, 0.7, 1.0}) {
    const XState in = pure_state(c0);
    const XState out = evolve_at_time(tuned, in, 3, t_star);
    worst_dist = std::max(worst_dist,
                          trace_distance(x_to_dense(in).entries, x_to_dense(out).entries));

    // Field-free check at the same instant: the transported measures reach
    // the input EoF even though the state itself returns only up to a phase.
    const CorrelationReport peak = full_report(evolve_at_time(bare, in, 3, t_star));
    const double e0 = eof(in);
    worst_measure = std::max({worst_measure, std::abs(peak.eof - e0),
                              std::abs(peak.discord_two_way - e0)});
  }
  rep.require_leq("max_trace_distance", worst_dist, 1e-8);
  rep.require_leq("max|peak_measure-E0|", worst_measure, 1e-6);
  return rep.finish();
}

// --- check 3: D = E on pure inputs ---
inline CheckResult check_pure_d_equals_e(const Options& opts) {
  Reporter rep("3-pure-d-equals-e", opts);
  const int n = opts.reduced ? 15 : 50;
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    const double c0 = static_cast<double>(i) / (n - 1);
    const CorrelationReport r = full_report(pure_state(c0));
    worst = std::max(worst, std::abs(r.discord_two_way - r.eof));
  }
  rep.require_leq("max|D-E|", worst, 1e-5);
  return rep.finish();
}

// --- check 4: Werner crossover at 1/sqrt(2) ---
inline CheckResult check_werner_crossover(const Options& opts) {
  Reporter rep("4-werner-crossover", opts);
  const XState werner = mdms_werner(1.0);

  const auto cross = crossover_amplitude(werner, 0.0);
  rep.require("crossover_found", cross.has_value());
  if (cross)
    rep.require_leq("|f*-1/sqrt2|", std::abs(*cross - 1.0 / std::sqrt(2.0)), 1e-4);

  const XState evolved = evolve_pair(werner, 1.0 / std::sqrt(2.0));
  Mat4 expected = Mat4::Zero();
  expected(0, 0) = 0.5;
  expected(1, 1) = 0.25;
  expected(3, 3) = 0.25;
  expected(0, 3) = expected(3, 0) = 1.0 / (2.0 * std::sqrt(2.0));
  const double dev = (x_to_dense(evolved).entries - expected).cwiseAbs().maxCoeff();
  rep.require_leq("max|rho-expected|", dev, 1e-12);
  rep.require_leq("|S-0.811278|", std::abs(von_neumann_entropy(evolved) - 0.811278), 1e-5);
  return rep.finish();
}

// --- check 5: two-way discord of the Bell-diagonal anchor state ---
inline CheckResult check_mmm_discord_anchor(const Options& opts) {
  Reporter rep("5-mmm-discord-anchor", opts);
  const DensityMatrix2Q rho = x_to_dense(mmm_state(0.53, 0.340, 0.035));
  const double d = discord_two_way(rho);
  const double d_grid = discord_grid_polished(rho, MeasuredSide::B, opts.reduced ? 128 : 256,
                                              opts.reduced ? 64 : 128);
  rep.require_leq("|D-0.210|", std::abs(d - 0.210), 5e-3);
  rep.result.detail += "; D=" + format_number(d) + "; D_grid_oracle=" + format_number(d_grid);
  return rep.finish();
}

// --- check 6: magnetic-field theorems on the N = 50 chain ---
inline CheckResult check_field_theorems(const Options& opts) {
  Reporter rep("6-field-theorems", opts);
  const auto start = clock::now();
  const int points = opts.reduced ? 60 : 400;
  ChainSpec spec{50, 1.0, 5.0};
  const auto grid = linspace(75.0 / points, 75.0, points);

  // EoF is a function of |f| alone, so the field must not move it. Checked
  // on an entangled input (the Bell-diagonal anchor carries no EoF).
  double worst_e = 0;
  for (const XState& input : {pure_state(0.7), mmm_state(0.53, 0.340, 0.035)}) {
    for (double t : grid) {
      ChainSpec zero = spec;
      zero.field = 0.0;
      const double e_h = eof(evolve_at_time(spec, input, 50, t));
      const double e_0 = eof(evolve_at_time(zero, input, 50, t));
      worst_e = std::max(worst_e, std::abs(e_h - e_0));
    }
  }
  rep.require_leq("max|E(h)-E(0)|", worst_e, 1e-10);

  const FieldBoundResult bound =
      field_lower_bound_check(spec, mmm_state(0.53, 0.340, 0.035), grid);
  rep.require_leq("max(D0-Dh)", bound.max_violation, 1e-7);
  rep.require_leq("runtime_s", seconds_since(start), 300.0);
  return rep.finish();
}

// --- check 7: discord created from a classically correlated input ---
inline CheckResult check_discord_creation(const Options& opts) {
  Reporter rep("7-discord-creation", opts);
  const ChainSpec spec{3, 1.0, 0.0};
  const XState input = mmm_state(1.0, 0.0, 0.0);
  const int points = opts.reduced ? 150 : 600;

  double min_inside = std::numeric_limits<double>::infinity();
  const auto grid = linspace(0.0, 4.5, points);
  std::vector<double> discords(grid.size());
  spinchain::detail::for_each_index(grid.size(), [&](size_t i) {
    discords[i] = discord_two_way(x_to_dense(evolve_at_time(spec, input, 3, grid[i])));
  });
  for (size_t i = 0; i < grid.size(); ++i) {
    const double mag = transition_amplitude(spec, 3, grid[i]).magnitude();
    if (mag > 0.05 && mag < 0.95) min_inside = std::min(min_inside, discords[i]);
  }
  rep.require("min_D_inside>1e-4", min_inside > 1e-4);
  rep.result.detail += " (min_D=" + format_number(min_inside) + ")";

  // |f3| = 0 at t = 0 and |f3| = 1 at the transfer time: discord must vanish.
  const double t_star = kPi / std::sqrt(2.0);
  const double d_at_0 = discord_two_way(x_to_dense(input));
  const double d_at_peak = discord_two_way(x_to_dense(evolve_at_time(spec, input, 3, t_star)));
  rep.require_leq("D_at_f0", d_at_0, 1e-7);
  rep.require_leq("D_at_f1", d_at_peak, 1e-7);
  return rep.finish();
}

// --- check 8: entanglement-sudden-death thresholds ---
inline CheckResult check_esd_thresholds(const Options& opts) {
  Reporter rep("8-esd-thresholds", opts);
  Rng rng(808);
  const int n_states = opts.reduced ? 200 : 1000;

  int mismatches = 0;
  for (int s = 0; s < n_states; ++s) {
    const XState x = random_entangled_xstate(rng);
    const EsdThresholds th = esd_threshold(x);
    const double cut = std::min(th.threshold_14.value(), th.threshold_23.value());
    for (int i = 0; i <= 30; ++i) {
      const double fsq = static_cast<double>(i) / 30;
      if (std::abs(fsq - cut) <= 1e-9) continue;  // boundary slack
      // f = 0 drains the coherences, so the state is dead there regardless
      // of the threshold sign
      const bool predicted_dead = fsq <= cut || fsq == 0.0;
      const double c = concurrence_x(evolve_pair(x, std::sqrt(fsq)));
      const bool dead = c == 0.0;
      if (dead != predicted_dead) ++mismatches;
    }
  }
  rep.require("threshold_sign_agreement", mismatches == 0);

  // p4 = 0 branch: exact scaling law C(f) = |f| C(0).
  double worst_scaling = 0;
  for (int s = 0; s < 50; ++s) {
    double p[3];
    double sum = 0;
    for (double& v : p) {
      v = -std::log(rng.uniform(1e-12, 1.0));
      sum += v;
    }
    for (double& v : p) v /= sum;
    XState x{p[0], p[1], p[2], 0.0, 0.0, 0.0};
    x.c23 = std::polar(rng.uniform() * std::sqrt(x.p2 * x.p3), rng.uniform(0.0, 2 * kPi));
    const double c0 = concurrence_x(x);
    const EsdThresholds th = esd_threshold(x);
    if (!th.scaling_law) ++mismatches;
    for (int i = 0; i <= 20; ++i) {
      const double mag = static_cast<double>(i) / 20;
      const double c = concurrence_x(evolve_pair(x, std::polar(mag, rng.uniform(0.0, 2 * kPi))));
      worst_scaling = std::max(worst_scaling, std::abs(c - mag * c0));
    }
  }
  for (auto [a, g] : {std::pair{0.0150, 0.9747}, std::pair{0.1625, 0.7649}}) {
    const XState x = mdms_r(a, g);
    const double c0 = concurrence_x(x);
    for (int i = 0; i <= 20; ++i) {
      const double mag = static_cast<double>(i) / 20;
      worst_scaling =
          std::max(worst_scaling, std::abs(concurrence_x(evolve_pair(x, mag)) - mag * c0));
    }
  }
  rep.require_leq("max|C-|f|C0|", worst_scaling, 1e-12);
  return rep.finish();
}

// --- check 9: simplex optimizer against the exhaustive-grid oracle ---
inline CheckResult check_optimizer_vs_bruteforce(const Options& opts) {
  Reporter rep("9-optimizer-vs-bruteforce", opts);
  const auto start = clock::now();
  Rng rng(909);
  const int n_random = opts.reduced ? 40 : 200;
  const int gt = opts.reduced ? 128 : 256;
  const int gp = opts.reduced ? 64 : 128;

  std::vector<XState> states;
  for (double c0 : {0.1, 0.4, 0.7, 1.0}) states.push_back(pure_state(c0));
  for (double a : {1.0 / 3.0, 0.4, 0.5, 0.7, 1.0}) states.push_back(mdms_werner(a));
  for (double a : {0.503, 0.55, 0.574}) states.push_back(mdms_p(a, 0.0));
  states.push_back(mdms_r(0.0150, 0.9747));
  states.push_back(mdms_r(0.1625, 0.7649));
  states.push_back(mmm_state(0.53, 0.340, 0.035));
  states.push_back(mmm_state(1.0, 0.0, 0.0));
  states.push_back(evolve_pair(mdms_werner(1.0), 1.0 / std::sqrt(2.0)));
  for (int i = 0; i < n_random; ++i) states.push_back(random_xstate(rng));

  double worst = 0;
  std::vector<double> devs(states.size());
  spinchain::detail::for_each_index(states.size(), [&](size_t i) {
    const DensityMatrix2Q rho = x_to_dense(states[i]);
    double dev = 0;
    for (MeasuredSide side : {MeasuredSide::A, MeasuredSide::B}) {
      const double d_opt = discord_one_way(rho, side);
      const double d_ref = discord_grid_polished(rho, side, gt, gp);
      dev = std::max(dev, std::abs(d_opt - d_ref));
    }
    devs[i] = dev;
  });
  for (double d : devs) worst = std::max(worst, d);

  rep.require_leq("max|D_opt-D_grid|", worst, 1e-4);
  rep.require_leq("runtime_s", seconds_since(start), 600.0);
  return rep.finish();
}

// --- check 10: zero-discord taxonomy ---
inline CheckResult check_zero_discord_taxonomy(const Options& opts) {
  Reporter rep("10-zero-discord-taxonomy", opts);
  Rng rng(1010);
  const int per_class = opts.reduced ? 8 : 25;
  const double tol = 1e-6;

  auto discords = [](const XState& x) {
    const DensityMatrix2Q rho = x_to_dense(x);
    return std::pair{discord_one_way(rho, MeasuredSide::B),
                     discord_one_way(rho, MeasuredSide::A)};
  };

  bool patterns_ok = true;
  for (int s = 0; s < per_class; ++s) {
    // condition 1: diagonal, both discords vanish
    XState diag = random_xstate(rng);
    diag.c14 = diag.c23 = 0;
    auto [d1_ab, d1_ba] = discords(diag);
    patterns_ok = patterns_ok && d1_ab <= tol && d1_ba <= tol;
    if (classify_zero_discord(diag) != ZeroDiscordClass::diagonal_cc) patterns_ok = false;

    // condition 2: p1 = p2, p3 = p4, |c14| = |c23| -> classical on side B
    {
      const double alpha = rng.uniform(0.05, 0.20);
      const double beta = 0.5 - alpha;
      const double gamma = std::sqrt(alpha * beta) * rng.uniform(0.4, 0.95);
      XState x{alpha, alpha, beta, beta, std::polar(gamma, rng.uniform(0.0, 2 * kPi)),
               std::polar(gamma, rng.uniform(0.0, 2 * kPi))};
      auto [d_ab, d_ba] = discords(x);
      patterns_ok = patterns_ok && d_ab <= tol && d_ba > tol;
      if (classify_zero_discord(x) != ZeroDiscordClass::quantum_classical) patterns_ok = false;
    }

    // condition 3: p1 = p3, p2 = p4, |c14| = |c23| -> classical on side A
    {
      const double alpha = rng.uniform(0.05, 0.20);
      const double beta = 0.5 - alpha;
      const double gamma = std::sqrt(alpha * beta) * rng.uniform(0.4, 0.95);
      XState x{alpha, beta, alpha, beta, std::polar(gamma, rng.uniform(0.0, 2 * kPi)),
               std::polar(gamma, rng.uniform(0.0, 2 * kPi))};
      auto [d_ab, d_ba] = discords(x);
      patterns_ok = patterns_ok && d_ba <= tol && d_ab > tol;
      if (classify_zero_discord(x) != ZeroDiscordClass::classical_quantum) patterns_ok = false;
    }

    // condition 4: uniform populations with |c14| = |c23| -> both vanish
    {
      const double gamma = 0.25 * rng.uniform(0.2, 1.0);
      XState x{0.25, 0.25, 0.25, 0.25, std::polar(gamma, rng.uniform(0.0, 2 * kPi)),
               std::polar(gamma, rng.uniform(0.0, 2 * kPi))};
      auto [d_ab, d_ba] = discords(x);
      patterns_ok = patterns_ok && d_ab <= tol && d_ba <= tol;
      if (classify_zero_discord(x) != ZeroDiscordClass::symmetric_zero) patterns_ok = false;
    }
  }
  rep.require("patterns", patterns_ok);

  // Diagonal inputs stay zero-discord under the channel for any f.
  double worst_perm = 0;
  const int n_perm = opts.reduced ? 30 : 100;
  for (int s = 0; s < n_perm; ++s) {
    XState diag = random_xstate(rng);
    diag.c14 = diag.c23 = 0;
    const cxd f = std::polar(rng.uniform(), rng.uniform(0.0, 2 * kPi));
    worst_perm =
        std::max(worst_perm, discord_two_way(x_to_dense(evolve_pair(diag, f))));
  }
  rep.require_leq("max_D_evolved_diagonal", worst_perm, 1e-6);
  return rep.finish();
}

// --- check 11: transport ordering for the MDMS families ---
inline CheckResult check_mdms_transport(const Options& opts) {
  Reporter rep("11-mdms-transport-ordering", opts);
  const int points = opts.reduced ? 50 : 100;

  // rho^P members: rescaled discord dominates everywhere, equality only at
  // |f| = 1.
  double worst_violation = -std::numeric_limits<double>::infinity();
  double min_interior_gap = std::numeric_limits<double>::infinity();
  double end_gap = 0;
  for (double a : {0.503, 0.55, 0.574}) {
    const XState x = mdms_p(a, 0.0);
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i + 1) / points;
    const AmplitudeScan scan = scan_amplitude(x, grid);
    for (int i = 0; i < points; ++i) {
      const double gap = scan.discord_tilde(i) - scan.eof_tilde(i);
      worst_violation = std::max(worst_violation, -gap);
      if (grid[i] < 1.0 - 1e-12)
        min_interior_gap = std::min(min_interior_gap, gap);
      else
        end_gap = std::abs(gap);
    }
  }
  rep.require_leq("max(E~-D~)", worst_violation, 1e-6);
  rep.require("interior_gap>1e-6", min_interior_gap > 1e-6);
  rep.require_leq("|D~-E~|_at_f1", end_gap, 1e-6);

  // rho^R, low mixedness: EoF wins at large |f|; entropy anchor 0.159.
  const XState r_pure = mdms_r(0.0150, 0.9747);
  rep.require_leq("|S-0.159|", std::abs(von_neumann_entropy(r_pure) - 0.159), 2e-3);
  rep.require("r_crossover_exists", crossover_amplitude(r_pure).has_value());

  // rho^R, high mixedness: discord dominates everywhere.
  const XState r_mixed = mdms_r(0.1625, 0.7649);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i + 1) / points;
  const AmplitudeScan scan = scan_amplitude(r_mixed, grid);
  double worst_r = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i)
    worst_r = std::max(worst_r, scan.eof_tilde(i) - scan.discord_tilde(i));
  rep.require_leq("max(E~-D~)_rho_r", worst_r, 1e-6);
  return rep.finish();
}

}  // namespace detail

inline std::vector<CheckResult> run_all(const Options& opts = {}) {
  return {
      detail::check_amplitude_oracle(opts),
      detail::check_perfect_transfer(opts),
      detail::check_pure_d_equals_e(opts),
      detail::check_werner_crossover(opts),
      detail::check_mmm_discord_anchor(opts),
      detail::check_field_theorems(opts),
      detail::check_discord_creation(opts),
      detail::check_esd_thresholds(opts),
      detail::check_optimizer_vs_bruteforce(opts),
      detail::check_zero_discord_taxonomy(opts),
      detail::check_mdms_transport(opts),
  };
}

inline std::string summarize(const std::vector<CheckResult>& results) {
  std::string out;
  int passed = 0;
  for (const auto& r : results) {
    out += (r.passed ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
    if (r.passed) ++passed;
  }
  out += "passed " + std::to_string(passed) + " of " + std::to_string(results.size()) +
         " acceptance checks\n";
  return out;
}

inline int count_failures(const std::vector<CheckResult>& results) {
  int n = 0;
  for (const auto& r : results)
    if (!r.passed) ++n;
  return n;
}

}  // namespace spinchain::acceptance
