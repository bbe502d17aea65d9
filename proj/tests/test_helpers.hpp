#pragma once

#include <random>

#include "spinchain/correlations.hpp"
#include "spinchain/states.hpp"

namespace testutil {

using namespace spinchain;

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

inline XState random_diagonal_state(Rng& rng) {
  XState x = random_xstate(rng);
  x.c14 = x.c23 = 0;
  return x;
}

// Haar-ish single-qubit unitary: exp(i alpha) exp(i beta n.sigma).
inline Mat2 random_unitary2(Rng& rng) {
  const double beta = rng.uniform(0.0, kPi);
  const double tz = rng.uniform(-1.0, 1.0);
  const double tphi = rng.uniform(0.0, 2 * kPi);
  const double sxy = std::sqrt(1.0 - tz * tz);
  Mat2 n_sigma;
  n_sigma << -tz, cxd(sxy * std::cos(tphi), sxy * std::sin(tphi)),
      cxd(sxy * std::cos(tphi), -sxy * std::sin(tphi)), tz;
  const Mat2 u = std::cos(beta) * Mat2::Identity() + cxd(0, 1) * std::sin(beta) * n_sigma;
  return std::polar(1.0, rng.uniform(0.0, 2 * kPi)) * u;
}

// Closed-form two-way discord of a Bell-diagonal state (independent oracle
// for the numeric optimizer): I - [1 - h((1 + max|c_i|)/2)] with I computed
// from the four Bell populations.
inline double luo_discord(double cx, double cy, double cz) {
  const double lam[4] = {0.25 * (1 - cx - cy - cz), 0.25 * (1 - cx + cy + cz),
                         0.25 * (1 + cx - cy + cz), 0.25 * (1 + cx + cy - cz)};
  double s = 0;
  for (double l : lam) s -= xlog2x(l);
  const double c = std::max({std::abs(cx), std::abs(cy), std::abs(cz)});
  const double mutual = 2.0 - s;
  const double classical = 1.0 - binary_entropy(0.5 * (1.0 + c));
  return mutual - classical;
}

// Random Bell-diagonal correlation vector drawn uniformly from the
// tetrahedron by rejection.
inline std::array<double, 3> random_tetrahedron_point(Rng& rng) {
  while (true) {
    const double cx = rng.uniform(-1.0, 1.0);
    const double cy = rng.uniform(-1.0, 1.0);
    const double cz = rng.uniform(-1.0, 1.0);
    const double e1 = 1 - cx - cy - cz, e2 = 1 - cx + cy + cz;
    const double e3 = 1 + cx - cy + cz, e4 = 1 + cx + cy - cz;
    if (e1 >= 0 && e2 >= 0 && e3 >= 0 && e4 >= 0) return {cx, cy, cz};
  }
}

}  // namespace testutil
