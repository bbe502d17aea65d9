#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "spinchain/linalg.hpp"

namespace spinchain {

// Two-qubit basis convention used throughout:
//   |1> = |dn dn>, |2> = |dn up>, |3> = |up dn>, |4> = |up up>,
// first slot = qubit A (the spin attached to the chain), second slot =
// qubit B (the detached spin 0). sigma_z |up> = +|up>.

// General 4x4 two-qubit density matrix in the basis above.
struct DensityMatrix2Q {
  Mat4 entries = Mat4::Zero();

  double trace() const { return entries.trace().real(); }

  Mat2 marginal_a() const {
    Mat2 m;
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        m(a, ap) = entries(2 * a, 2 * ap) + entries(2 * a + 1, 2 * ap + 1);
    return m;
  }

  Mat2 marginal_b() const {
    Mat2 m;
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        m(b, bp) = entries(b, bp) + entries(2 + b, 2 + bp);
    return m;
  }

  // Hermiticity and unit trace to 1e-12; positivity is checked where an
  // eigendecomposition happens anyway.
  void validate() const {
    if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::domain_error("DensityMatrix2Q: matrix is not Hermitian");
    if (std::abs(entries.trace() - cxd(1.0)) > 1e-12)
      throw std::domain_error("DensityMatrix2Q: trace is not 1");
  }
};

// Seven-parameter X-form state: populations p1..p4 plus the two
// anti-diagonal coherences rho14 and rho23. Closed under the chain channel.
struct XState {
  double p1 = 0, p2 = 0, p3 = 0, p4 = 0;
  cxd c14 = 0, c23 = 0;

  void validate() const {
    const double tol = 1e-12;
    if (p1 < -tol || p2 < -tol || p3 < -tol || p4 < -tol)
      throw std::domain_error("XState: negative population");
    if (std::abs(p1 + p2 + p3 + p4 - 1.0) > tol)
      throw std::domain_error("XState: populations do not sum to 1");
    if (std::norm(c14) > p1 * p4 + tol)
      throw std::domain_error("XState: |c14|^2 exceeds p1*p4");
    if (std::norm(c23) > p2 * p3 + tol)
      throw std::domain_error("XState: |c23|^2 exceeds p2*p3");
  }
};

inline DensityMatrix2Q x_to_dense(const XState& x) {
  x.validate();
  DensityMatrix2Q rho;
  rho.entries(0, 0) = x.p1;
  rho.entries(1, 1) = x.p2;
  rho.entries(2, 2) = x.p3;
  rho.entries(3, 3) = x.p4;
  rho.entries(0, 3) = x.c14;
  rho.entries(3, 0) = std::conj(x.c14);
  rho.entries(1, 2) = x.c23;
  rho.entries(2, 1) = std::conj(x.c23);
  return rho;
}

// Inverse of x_to_dense. Rejects matrices with weight outside the X pattern.
inline XState dense_to_x(const DensityMatrix2Q& rho) {
  const Mat4& m = rho.entries;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on_pattern = (i == j) || (i + j == 3);
      if (!on_pattern && std::abs(m(i, j)) > 1e-12)
        throw std::domain_error("dense_to_x: matrix is not of X form");
    }
  XState x;
  x.p1 = m(0, 0).real();
  x.p2 = m(1, 1).real();
  x.p3 = m(2, 2).real();
  x.p4 = m(3, 3).real();
  x.c14 = m(0, 3);
  x.c23 = m(1, 2);
  x.validate();
  return x;
}

// Pure entangled input sin(g)|dndn> + cos(g)|upup> with g = arcsin(c0)/2,
// so its concurrence is exactly c0.
inline XState pure_state(double c0) {
  if (!(c0 >= 0.0 && c0 <= 1.0))
    throw std::domain_error("pure_state: concurrence must lie in [0, 1]");
  const double g = 0.5 * std::asin(c0);
  const double s = std::sin(g), c = std::cos(g);
  XState x;
  x.p1 = s * s;
  x.p4 = c * c;
  x.c14 = s * c;
  return x;
}

// rho^P family: p1 = p4 = c14 = a/2, p2/p3 split by g.
inline XState mdms_p(double a, double g) {
  if (a < 0.0) throw std::domain_error("mdms_p: a must be non-negative");
  if (a + g > 1.0) throw std::domain_error("mdms_p: requires a + g <= 1");
  XState x;
  x.p1 = 0.5 * a;
  x.p2 = 0.5 * (1.0 - a - g);
  x.p3 = 0.5 * (1.0 - a + g);
  x.p4 = 1.0 - x.p1 - x.p2 - x.p3;  // = a/2 by unit trace
  x.c14 = 0.5 * a;
  x.validate();
  return x;
}

// Werner states rho^W = a |Phi+><Phi+| + (1-a)/4 * identity.
inline XState mdms_werner(double a) {
  if (a < -1.0 / 3.0 || a > 1.0)
    throw std::domain_error("mdms_werner: a must lie in [-1/3, 1]");
  XState x;
  x.p1 = 0.25 * (1.0 + a);
  x.p2 = 0.25 * (1.0 - a);
  x.p3 = 0.25 * (1.0 - a);
  x.p4 = 1.0 - x.p1 - x.p2 - x.p3;  // = (1+a)/4
  x.c14 = 0.5 * a;
  x.validate();
  return x;
}

// rho^R family: rank-deficient branch with p3 = 0.
inline XState mdms_r(double a, double g) {
  if (a < 0.0 || a > 1.0 / 3.0) throw std::domain_error("mdms_r: a must lie in [0, 1/3]");
  if (a + g > 1.0) throw std::domain_error("mdms_r: requires a + g <= 1");
  if (g < 0.0) throw std::domain_error("mdms_r: g must be non-negative");
  XState x;
  x.p1 = 0.5 * (1.0 - a);
  x.p2 = a;
  x.p3 = 0.0;
  x.p4 = 1.0 - x.p1 - x.p2 - x.p3;  // = (1-a)/2
  x.c14 = 0.5 * g;
  x.validate();
  return x;
}

// Maximally-mixed-marginal (Bell-diagonal) state
// (1/4)(identity + sum_i c_i sigma_i (x) sigma_i).
inline XState mmm_state(double cx, double cy, double cz) {
  // Eigenvalues of the Bell-diagonal matrix; all four must be non-negative.
  const double e1 = 0.25 * (1.0 + cz - std::abs(cx - cy));
  const double e2 = 0.25 * (1.0 + cz + std::abs(cx - cy));
  const double e3 = 0.25 * (1.0 - cz - std::abs(cx + cy));
  const double e4 = 0.25 * (1.0 - cz + std::abs(cx + cy));
  if (std::min(std::min(e1, e2), std::min(e3, e4)) < -1e-12)
    throw std::domain_error("mmm_state: (cx, cy, cz) lies outside the Bell tetrahedron");
  XState x;
  x.p1 = 0.25 * (1.0 + cz);
  x.p2 = 0.25 * (1.0 - cz);
  x.p3 = 0.25 * (1.0 - cz);
  x.p4 = 0.25 * (1.0 + cz);
  x.c14 = 0.25 * (cx - cy);
  x.c23 = 0.25 * (cx + cy);
  x.validate();
  return x;
}

// Projective measurement direction on the Bloch sphere. The pair of
// projectors is |v><v| and |v_perp><v_perp| with
//   |v> = cos(theta/2)|dn> + e^{i phi} sin(theta/2)|up>.
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  Vec2 ket0() const {
    return Vec2(std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi));
  }
  Vec2 ket1() const {
    return Vec2(std::sin(0.5 * theta), -std::polar(std::cos(0.5 * theta), phi));
  }
  std::pair<Mat2, Mat2> projectors() const {
    const Vec2 v0 = ket0(), v1 = ket1();
    return {v0 * v0.adjoint(), v1 * v1.adjoint()};
  }

  // Fold (theta, phi) back into [0, pi] x [0, 2 pi) without moving the
  // projector pair.
  MeasurementBasis normalized() const {
    double t = std::fmod(theta, 2.0 * kPi);
    double p = phi;
    if (t < 0) t += 2.0 * kPi;
    if (t > kPi) {
      t = 2.0 * kPi - t;
      p += kPi;
    }
    p = std::fmod(p, 2.0 * kPi);
    if (p < 0) p += 2.0 * kPi;
    return {t, p};
  }
};

// von Neumann entropy in bits, -Tr[rho log2 rho].
inline double von_neumann_entropy(const DensityMatrix2Q& rho) {
  rho.validate();
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho.entries, Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

inline double von_neumann_entropy(const Mat2& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::domain_error("von_neumann_entropy: matrix is not Hermitian");
  if (std::abs(rho.trace() - cxd(1.0)) > 1e-12)
    throw std::domain_error("von_neumann_entropy: trace is not 1");
  const auto [lo, hi] = hermitian_eigenvalues_2x2(rho);
  if (lo < -kPsdTolerance)
    throw std::domain_error("von_neumann_entropy: matrix is not positive semidefinite");
  return -xlog2x(lo) - xlog2x(hi);
}

inline double von_neumann_entropy(const XState& x) { return von_neumann_entropy(x_to_dense(x)); }

}  // namespace spinchain
