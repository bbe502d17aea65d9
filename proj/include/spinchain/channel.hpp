#pragma once

#include <cmath>
#include <complex>

#include "spinchain/chain.hpp"
#include "spinchain/states.hpp"

namespace spinchain {

// Excitation-preserving channel induced on the pair (r, 0) by the chain.
// The transition amplitude f is the only dynamical parameter:
//   p1 -> p1 + (1-|f|^2) p3     p3 -> |f|^2 p3
//   p2 -> p2 + (1-|f|^2) p4     p4 -> |f|^2 p4
//   c14 -> f c14                c23 -> f c23
// Trace-preserving in exact arithmetic, so the output is asserted valid
// rather than renormalized.
inline XState evolve_pair(const XState& input, cxd f) {
  input.validate();
  const double mag2 = std::norm(f);
  if (mag2 > 1.0 + 2e-9)
    throw std::domain_error("evolve_pair: |f| must not exceed 1");

  const double loss = std::max(0.0, 1.0 - mag2);
  XState out;
  out.p1 = input.p1 + loss * input.p3;
  out.p3 = mag2 * input.p3;
  out.p2 = input.p2 + loss * input.p4;
  out.p4 = mag2 * input.p4;
  out.c14 = f * input.c14;
  out.c23 = f * input.c23;
  out.validate();
  return out;
}

// Same map on a single qubit: populations scale with |f|^2, the coherence
// <dn|rho|up> with f, and the lost weight folds into the down state.
inline Mat2 evolve_single(double p_up, cxd coherence, cxd f) {
  if (!(p_up >= 0.0 && p_up <= 1.0))
    throw std::domain_error("evolve_single: p_up must lie in [0, 1]");
  if (std::norm(coherence) > p_up * (1.0 - p_up) + 1e-12)
    throw std::domain_error("evolve_single: coherence too large for a valid state");
  const double mag2 = std::norm(f);
  if (mag2 > 1.0 + 2e-9)
    throw std::domain_error("evolve_single: |f| must not exceed 1");

  Mat2 out;
  out(0, 0) = (1.0 - p_up) + (1.0 - mag2) * p_up;
  out(1, 1) = mag2 * p_up;
  out(0, 1) = f * coherence;
  out(1, 0) = std::conj(out(0, 1));
  return out;
}

// Composition of the closed-form amplitude with the pair channel. r = 1
// realizes the chain acting as an amplitude-damping environment on the
// first spin; r > 1 realizes transport to site r.
inline XState evolve_at_time(const ChainSpec& spec, const XState& input, int r, double t) {
  const TransitionAmplitude f = transition_amplitude(spec, r, t);
  return evolve_pair(input, f.clamped());
}

}  // namespace spinchain
