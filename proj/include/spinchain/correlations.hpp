#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "spinchain/errors.hpp"
#include "spinchain/states.hpp"

namespace spinchain {

// Which qubit the projective measurement acts on. Side A is the chain spin
// (first tensor slot), side B the detached spin 0 (second slot).
enum class MeasuredSide { A, B };

// Arrow convention for one-way quantities: the "ab" direction measures
// side B and conditions A on the outcome (D-left-arrow); "ba" measures
// side A (D-right-arrow).
struct CorrelationReport {
  double entropy_total = 0;   // S(rho_AB)
  double entropy_a = 0;       // S(rho_A)
  double entropy_b = 0;       // S(rho_B)
  double mutual_info = 0;     // I = S_A + S_B - S_AB
  double classical_ab = 0;    // J, measurement on B
  double classical_ba = 0;    // J, measurement on A
  double discord_ab = 0;      // D, measurement on B
  double discord_ba = 0;      // D, measurement on A
  double discord_two_way = 0; // max of the two one-way discords
  double concurrence = 0;
  double eof = 0;
};

struct DiscordOptions {
  int grid_theta = 64;
  int grid_phi = 32;
  double refine_tolerance = 1e-9;
  int max_refine_steps = 500;
  int max_restarts = 3;
};

namespace detail {

// Rounding-level negatives clamp to zero; anything worse is a bug.
inline double clamp_rounding(double x, const char* what, double tol = 1e-9) {
  if (x < -tol) throw consistency_error(std::string(what) + ": negative beyond tolerance");
  return std::max(x, 0.0);
}

// Average post-measurement entropy of the unmeasured qubit, as a function
// of the measurement direction. Caches the state entries so the grid scan
// touches no Eigen machinery.
struct ConditionalEntropy {
  std::array<std::array<cxd, 4>, 4> r{};
  MeasuredSide side = MeasuredSide::B;

  ConditionalEntropy(const DensityMatrix2Q& rho, MeasuredSide s) : side(s) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] = rho.entries(i, j);
  }

  // Measurement phases that diagonalize the anti-diagonal coherence block;
  // for X states the equatorial minima of the phi landscape sit there.
  std::pair<double, double> coherence_phase_hints() const {
    const cxd c_outer = r[0][3];
    const cxd c_inner = side == MeasuredSide::B ? r[1][2] : std::conj(r[1][2]);
    const double a_outer = std::abs(c_outer) > 1e-15 ? std::arg(c_outer) : 0.0;
    const double a_inner = std::abs(c_inner) > 1e-15 ? std::arg(c_inner) : 0.0;
    const double base = 0.5 * (a_inner - a_outer);
    return {base, base + 0.5 * kPi};
  }

  double operator()(double theta, double phi) const {
    const double ct = std::cos(0.5 * theta), st = std::sin(0.5 * theta);
    const cxd e = std::polar(1.0, phi);
    // Projector kets |v> and |v_perp> on the measured qubit.
    const cxd w[2][2] = {{ct, e * st}, {st, -e * ct}};

    double h = 0.0;
    for (const auto& v : w) {
      const cxd q00 = std::conj(v[0]) * v[0];
      const cxd q01 = std::conj(v[0]) * v[1];
      const cxd q10 = std::conj(v[1]) * v[0];
      const cxd q11 = std::conj(v[1]) * v[1];

      cxd m00, m01, m11;
      if (side == MeasuredSide::B) {
        m00 = q00 * r[0][0] + q01 * r[0][1] + q10 * r[1][0] + q11 * r[1][1];
        m01 = q00 * r[0][2] + q01 * r[0][3] + q10 * r[1][2] + q11 * r[1][3];
        m11 = q00 * r[2][2] + q01 * r[2][3] + q10 * r[3][2] + q11 * r[3][3];
      } else {
        m00 = q00 * r[0][0] + q01 * r[0][2] + q10 * r[2][0] + q11 * r[2][2];
        m01 = q00 * r[0][1] + q01 * r[0][3] + q10 * r[2][1] + q11 * r[2][3];
        m11 = q00 * r[1][1] + q01 * r[1][3] + q10 * r[3][1] + q11 * r[3][3];
      }

      const double p = m00.real() + m11.real();
      if (p <= 1e-14) continue;  // zero-probability branch
      const double mean = 0.5 * (m00.real() + m11.real());
      const double rad = std::hypot(0.5 * (m00.real() - m11.real()), std::abs(m01));
      h += p * (-xlog2x((mean - rad) / p) - xlog2x((mean + rad) / p));
    }
    return h;
  }
};

struct SimplexVertex {
  double theta, phi, value;
};

// Nelder-Mead on the (theta, phi) plane. The objective is periodic, so the
// walk is unconstrained. Returns false if the value spread did not reach
// tol within max_steps.
template <typename F>
bool nelder_mead(const F& f, std::array<SimplexVertex, 3>& s, double tol, int max_steps) {
  auto order = [&s] {
    std::sort(s.begin(), s.end(),
              [](const SimplexVertex& a, const SimplexVertex& b) { return a.value < b.value; });
  };
  order();
  for (int step = 0; step < max_steps; ++step) {
    if (s[2].value - s[0].value <= tol) return true;

    const double cth = 0.5 * (s[0].theta + s[1].theta);
    const double cph = 0.5 * (s[0].phi + s[1].phi);
    auto eval = [&f](double th, double ph) { return SimplexVertex{th, ph, f(th, ph)}; };

    SimplexVertex refl = eval(2.0 * cth - s[2].theta, 2.0 * cph - s[2].phi);
    if (refl.value < s[0].value) {
      SimplexVertex exp_ =
          eval(cth + 2.0 * (refl.theta - cth), cph + 2.0 * (refl.phi - cph));
      s[2] = exp_.value < refl.value ? exp_ : refl;
    } else if (refl.value < s[1].value) {
      s[2] = refl;
    } else {
      const SimplexVertex& base = refl.value < s[2].value ? refl : s[2];
      SimplexVertex contr =
          eval(cth + 0.5 * (base.theta - cth), cph + 0.5 * (base.phi - cph));
      if (contr.value < base.value) {
        s[2] = contr;
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].theta = s[0].theta + 0.5 * (s[i].theta - s[0].theta);
          s[i].phi = s[0].phi + 0.5 * (s[i].phi - s[0].phi);
          s[i].value = f(s[i].theta, s[i].phi);
        }
      }
    }
    order();
  }
  return s[2].value - s[0].value <= tol;
}

struct EntropyMinimum {
  double value;
  MeasurementBasis basis;
};

template <typename F>
EntropyMinimum minimize_on_sphere(const F& f, const DiscordOptions& opts,
                                  std::pair<double, double> phase_hints = {0.0, 0.5 * kPi}) {
  if (opts.grid_theta < 2 || opts.grid_phi < 2)
    throw std::domain_error("minimize_on_sphere: grid must be at least 2x2");

  // Coarse scan plus the closed-form candidate bases (z, x, y) and the
  // coherence-phase equatorial points as seeds.
  std::vector<SimplexVertex> pool;
  pool.reserve(static_cast<size_t>(opts.grid_theta) * opts.grid_phi + 5);
  for (int i = 0; i < opts.grid_theta; ++i) {
    const double th = kPi * i / (opts.grid_theta - 1);
    for (int j = 0; j < opts.grid_phi; ++j) {
      const double ph = 2.0 * kPi * j / opts.grid_phi;
      pool.push_back({th, ph, f(th, ph)});
    }
  }
  for (const auto& [th, ph] :
       {std::pair{0.0, 0.0}, std::pair{0.5 * kPi, 0.0}, std::pair{0.5 * kPi, 0.5 * kPi},
        std::pair{0.5 * kPi, phase_hints.first}, std::pair{0.5 * kPi, phase_hints.second}})
    pool.push_back({th, ph, f(th, ph)});
  std::sort(pool.begin(), pool.end(),
            [](const SimplexVertex& a, const SimplexVertex& b) { return a.value < b.value; });

  // Simplex from the best three points, unless they are nearly collinear.
  std::array<SimplexVertex, 3> s{pool[0], pool[1], pool[2]};
  const double area = std::abs((s[1].theta - s[0].theta) * (s[2].phi - s[0].phi) -
                               (s[2].theta - s[0].theta) * (s[1].phi - s[0].phi));
  const double delta = kPi / opts.grid_theta;
  if (area < 1e-8) {
    s[1] = {s[0].theta + delta, s[0].phi, f(s[0].theta + delta, s[0].phi)};
    s[2] = {s[0].theta, s[0].phi + delta, f(s[0].theta, s[0].phi + delta)};
  }
  nelder_mead(f, s, opts.refine_tolerance, opts.max_refine_steps);
  SimplexVertex best = s[0].value <= pool[0].value ? s[0] : pool[0];

  // The simplex can collapse onto a line and stall, so convergence is only
  // accepted once a fresh non-degenerate simplex fails to improve the value.
  bool stationary = false;
  for (int attempt = 0; attempt < opts.max_restarts && !stationary; ++attempt) {
    const double scale = delta / std::pow(3.0, attempt);
    std::array<SimplexVertex, 3> fresh{
        best, SimplexVertex{best.theta + scale, best.phi, f(best.theta + scale, best.phi)},
        SimplexVertex{best.theta, best.phi + scale, f(best.theta, best.phi + scale)}};
    nelder_mead(f, fresh, opts.refine_tolerance, opts.max_refine_steps);
    if (fresh[0].value >= best.value - opts.refine_tolerance)
      stationary = true;
    if (fresh[0].value < best.value) best = fresh[0];
  }

  if (!stationary)
    throw convergence_error("minimize_on_sphere: refinement did not converge", best.value);
  return {best.value, MeasurementBasis{best.theta, best.phi}.normalized()};
}

}  // namespace detail

// Conditional entropy sum_i p_i S(rho_i) for one measurement direction.
inline double conditional_entropy(const DensityMatrix2Q& rho, MeasuredSide side, double theta,
                                  double phi) {
  return detail::ConditionalEntropy(rho, side)(theta, phi);
}

struct MeasurementOutcome {
  double probability = 0;
  Mat2 state = Mat2::Zero();  // conditional state of the unmeasured qubit
  bool valid = false;         // false marks a zero-probability branch
};

// Post-measurement ensemble {p_i, rho_i} for a projective measurement on
// one side. Zero-probability branches come back flagged invalid.
inline std::vector<MeasurementOutcome> post_measurement_ensemble(const DensityMatrix2Q& rho,
                                                                 const MeasurementBasis& basis,
                                                                 MeasuredSide side) {
  rho.validate();
  std::vector<MeasurementOutcome> out(2);
  const Vec2 kets[2] = {basis.ket0(), basis.ket1()};
  for (int i = 0; i < 2; ++i) {
    const Vec2& w = kets[i];
    Mat2 m = Mat2::Zero();
    for (int u = 0; u < 2; ++u)
      for (int up = 0; up < 2; ++up)
        for (int v = 0; v < 2; ++v)
          for (int vp = 0; vp < 2; ++vp) {
            const int row = side == MeasuredSide::B ? 2 * u + v : 2 * v + u;
            const int col = side == MeasuredSide::B ? 2 * up + vp : 2 * vp + up;
            m(u, up) += std::conj(w(v)) * rho.entries(row, col) * w(vp);
          }
    const double p = m.trace().real();
    if (p > 1e-14) {
      out[i].probability = p;
      out[i].state = m / p;
      out[i].valid = true;
    }
  }
  return out;
}

// Wootters concurrence of an X state, exact closed form.
inline double concurrence_x(const XState& x) {
  x.validate();
  const double b1 = std::abs(x.c14) - std::sqrt(std::max(0.0, x.p2 * x.p3));
  const double b2 = std::abs(x.c23) - std::sqrt(std::max(0.0, x.p1 * x.p4));
  return 2.0 * std::max({0.0, b1, b2});
}

// Wootters concurrence of a general two-qubit state via the spin-flipped
// matrix rho (sy x sy) rho* (sy x sy).
inline double concurrence_general(const DensityMatrix2Q& rho) {
  rho.validate();
  Mat2 sy;
  sy << 0.0, cxd(0.0, 1.0), cxd(0.0, -1.0), 0.0;
  const Mat4 flip = kron(sy, sy);
  const Mat4 sqrt_rho = hermitian_sqrt(rho.entries);  // rejects non-PSD input
  const Mat4 tilde = flip * rho.entries.conjugate() * flip;
  Eigen::SelfAdjointEigenSolver<Mat4> es(sqrt_rho * tilde * sqrt_rho, Eigen::EigenvaluesOnly);

  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

// Entanglement of formation from the concurrence.
inline double eof_from_concurrence(double c) {
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return binary_entropy(0.5 * (1.0 + root));
}

inline double eof(const XState& x) { return eof_from_concurrence(concurrence_x(x)); }
inline double eof(const DensityMatrix2Q& rho) {
  return eof_from_concurrence(concurrence_general(rho));
}

struct ClassicalCorrelationResult {
  double value = 0;
  MeasurementBasis argmin_basis;
  double min_conditional_entropy = 0;
};

// One-way classical correlation J = S(unmeasured marginal) - min_Pi H.
inline ClassicalCorrelationResult classical_correlation(const DensityMatrix2Q& rho,
                                                        MeasuredSide side,
                                                        const DiscordOptions& opts = {}) {
  rho.validate();
  const detail::ConditionalEntropy f(rho, side);
  const auto minimum = detail::minimize_on_sphere(
      [&f](double th, double ph) { return f(th, ph); }, opts, f.coherence_phase_hints());
  const Mat2 unmeasured = side == MeasuredSide::B ? rho.marginal_a() : rho.marginal_b();
  const double value =
      detail::clamp_rounding(von_neumann_entropy(unmeasured) - minimum.value,
                             "classical_correlation");
  return {value, minimum.basis, minimum.value};
}

// One-way quantum discord D = I - J = S(measured marginal) - S(rho) + min H.
inline double discord_one_way(const DensityMatrix2Q& rho, MeasuredSide side,
                              const DiscordOptions& opts = {}) {
  rho.validate();
  const detail::ConditionalEntropy f(rho, side);
  const auto minimum = detail::minimize_on_sphere(
      [&f](double th, double ph) { return f(th, ph); }, opts, f.coherence_phase_hints());
  const Mat2 measured = side == MeasuredSide::B ? rho.marginal_b() : rho.marginal_a();
  return detail::clamp_rounding(
      von_neumann_entropy(measured) - von_neumann_entropy(rho) + minimum.value,
      "discord_one_way");
}

// Two-way discord, max over the two measured sides. Null exactly on
// classical-classical states.
inline double discord_two_way(const DensityMatrix2Q& rho, const DiscordOptions& opts = {}) {
  return std::max(discord_one_way(rho, MeasuredSide::A, opts),
                  discord_one_way(rho, MeasuredSide::B, opts));
}

// Discord from an exhaustive uniform grid, no refinement. The grid minimum
// upper-bounds the true one, so this upper-bounds the discord.
inline double discord_bruteforce(const DensityMatrix2Q& rho, MeasuredSide side, int n_theta,
                                 int n_phi) {
  if (n_theta < 2 || n_phi < 2)
    throw std::domain_error("discord_bruteforce: grid must be at least 2x2");
  rho.validate();
  const detail::ConditionalEntropy f(rho, side);
  double min_h = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_theta; ++i) {
    const double th = kPi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) min_h = std::min(min_h, f(th, 2.0 * kPi * j / n_phi));
  }
  const Mat2 measured = side == MeasuredSide::B ? rho.marginal_b() : rho.marginal_a();
  return detail::clamp_rounding(
      von_neumann_entropy(measured) - von_neumann_entropy(rho) + min_h,
      "discord_bruteforce");
}

namespace detail {

inline CorrelationReport full_report_impl(const DensityMatrix2Q& rho, double concurrence,
                                          const DiscordOptions& opts) {
  CorrelationReport rep;
  rep.entropy_total = von_neumann_entropy(rho);
  rep.entropy_a = von_neumann_entropy(rho.marginal_a());
  rep.entropy_b = von_neumann_entropy(rho.marginal_b());
  rep.mutual_info =
      clamp_rounding(rep.entropy_a + rep.entropy_b - rep.entropy_total, "mutual_info");

  const ConditionalEntropy fa(rho, MeasuredSide::A), fb(rho, MeasuredSide::B);
  const auto min_a = minimize_on_sphere([&fa](double t, double p) { return fa(t, p); }, opts,
                                        fa.coherence_phase_hints());
  const auto min_b = minimize_on_sphere([&fb](double t, double p) { return fb(t, p); }, opts,
                                        fb.coherence_phase_hints());

  rep.classical_ab = clamp_rounding(rep.entropy_a - min_b.value, "classical_ab");
  rep.classical_ba = clamp_rounding(rep.entropy_b - min_a.value, "classical_ba");
  rep.discord_ab =
      clamp_rounding(rep.entropy_b - rep.entropy_total + min_b.value, "discord_ab");
  rep.discord_ba =
      clamp_rounding(rep.entropy_a - rep.entropy_total + min_a.value, "discord_ba");
  rep.discord_two_way = std::max(rep.discord_ab, rep.discord_ba);
  rep.concurrence = concurrence;
  rep.eof = eof_from_concurrence(concurrence);
  return rep;
}

}  // namespace detail

inline CorrelationReport full_report(const DensityMatrix2Q& rho,
                                     const DiscordOptions& opts = {}) {
  rho.validate();
  return detail::full_report_impl(rho, concurrence_general(rho), opts);
}

// X-state overload: same entropic path on the dense matrix, concurrence by
// the exact X formula.
inline CorrelationReport full_report(const XState& x, const DiscordOptions& opts = {}) {
  return detail::full_report_impl(x_to_dense(x), concurrence_x(x), opts);
}

}  // namespace spinchain
