#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "spinchain/errors.hpp"

namespace spinchain {

using cxd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Eigenvalues below this are rejected as genuinely negative; values in
// [-kPsdTolerance, 0) are treated as rounding noise and clamped to zero.
constexpr double kPsdTolerance = 1e-10;

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// x log2 x with the 0 log 0 = 0 convention. Tiny negatives from rounding
// count as zero.
inline double xlog2x(double x) {
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x). The max keeps the
// endpoints at a clean +0.
inline double binary_entropy(double x) {
  return std::max(0.0, -xlog2x(x) - xlog2x(1.0 - x));
}

// Entropy in bits of a probability vector; rejects weights below the PSD
// tolerance.
template <typename Derived>
double entropy_of_spectrum(const Eigen::MatrixBase<Derived>& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    double lambda = eigenvalues(i);
    if (lambda < -kPsdTolerance)
      throw std::domain_error("entropy_of_spectrum: matrix is not positive semidefinite");
    s -= xlog2x(lambda);
  }
  return s;
}

// Eigenvalues of a 2x2 Hermitian matrix, closed form, ascending.
inline std::pair<double, double> hermitian_eigenvalues_2x2(const Mat2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double half_sum = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {half_sum - rad, half_sum + rad};
}

// Trace distance (1/2)||rho - sigma||_1 for Hermitian inputs.
inline double trace_distance(const Mat4& rho, const Mat4& sigma) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Hermitian square root, clamping rounding-level negative eigenvalues.
inline Mat4 hermitian_sqrt(const Mat4& m) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(m);
  Eigen::Vector4d vals = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (vals(i) < -kPsdTolerance)
      throw std::domain_error("hermitian_sqrt: matrix is not positive semidefinite");
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace spinchain
