#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "spinchain/errors.hpp"
#include "spinchain/linalg.hpp"

namespace spinchain {

// Uniform XX chain with open boundaries: N sites, exchange coupling J > 0,
// uniform transverse field h. Times are measured in units of 1/J.
struct ChainSpec {
  int n_sites = 2;
  double coupling = 1.0;
  double field = 0.0;

  void validate() const {
    if (n_sites < 2) throw std::domain_error("ChainSpec: n_sites must be at least 2");
    if (!(coupling > 0.0)) throw std::domain_error("ChainSpec: coupling must be positive");
    if (!std::isfinite(coupling) || !std::isfinite(field))
      throw std::domain_error("ChainSpec: coupling and field must be finite");
  }
};

// Single-excitation transition amplitude f_r(t) = <r|exp(-iHt)|1>.
struct TransitionAmplitude {
  cxd value;

  double magnitude() const { return std::abs(value); }

  // Scaled onto the closed unit disc; |value| can exceed 1 by rounding and
  // the channel map needs |f| <= 1 to keep states positive.
  cxd clamped() const {
    const double m = std::abs(value);
    return m > 1.0 ? value / m : value;
  }
};

namespace detail {

inline void check_time(double t) {
  if (!std::isfinite(t)) throw std::domain_error("transition_amplitude: time must be finite");
}

}  // namespace detail

// Closed-form amplitude for the uniform chain,
//   f_r(t) = 2/(N+1) sum_k sin(k pi/(N+1)) sin(k pi r/(N+1))
//            exp(-2it(h + J cos(k pi/(N+1)))).
inline TransitionAmplitude transition_amplitude(const ChainSpec& spec, int r, double t) {
  spec.validate();
  detail::check_time(t);
  const int n = spec.n_sites;
  if (r < 1 || r > n) throw std::domain_error("transition_amplitude: site index out of range");

  const double step = kPi / (n + 1);
  cxd f = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double s1 = std::sin(k * step);
    const double sr = std::sin(k * step * r);
    const double phase = -2.0 * t * (spec.field + spec.coupling * std::cos(k * step));
    f += s1 * sr * cxd(std::cos(phase), std::sin(phase));
  }
  f *= 2.0 / (n + 1);

  TransitionAmplitude out{f};
  if (out.magnitude() > 1.0 + 1e-12)
    throw consistency_error("transition_amplitude: |f| exceeds 1 beyond rounding");
  return out;
}

// All N amplitudes at once; component r-1 is f_r(t).
inline std::vector<TransitionAmplitude> transition_amplitudes_all(const ChainSpec& spec,
                                                                  double t) {
  spec.validate();
  detail::check_time(t);
  std::vector<TransitionAmplitude> out;
  out.reserve(spec.n_sites);
  for (int r = 1; r <= spec.n_sites; ++r) out.push_back(transition_amplitude(spec, r, t));
  return out;
}

inline constexpr int kMaxOracleSites = 2000;

// Dense-diagonalization oracle: the full single-excitation propagator
// exp(-iHt) with H the tridiagonal hopping matrix whose spectrum matches
// the closed form above (diagonal 2h, off-diagonal J). Independent of
// transition_amplitude; used to cross-check it.
inline Eigen::MatrixXcd propagator_oracle(const ChainSpec& spec, double t) {
  spec.validate();
  detail::check_time(t);
  const int n = spec.n_sites;
  if (n > kMaxOracleSites)
    throw capacity_error("propagator_oracle: chain length exceeds dense solver bound");

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = 2.0 * spec.field;
    if (i + 1 < n) {
      h(i, i + 1) = spec.coupling;
      h(i + 1, i) = spec.coupling;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);

  Eigen::VectorXcd phases(n);
  for (int k = 0; k < n; ++k) {
    const double a = -es.eigenvalues()(k) * t;
    phases(k) = cxd(std::cos(a), std::sin(a));
  }
  const Eigen::MatrixXcd v = es.eigenvectors().cast<cxd>();
  return v * phases.asDiagonal() * v.transpose();
}

}  // namespace spinchain
