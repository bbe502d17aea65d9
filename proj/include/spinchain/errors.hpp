#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

// Requested problem size exceeds what the dense solvers are sized for.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Iterative minimization failed to reach its tolerance. Carries the best
// value found so callers can decide whether it is still usable.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best)
      : std::runtime_error(what), best_value(best) {}
  double best_value;
};

// A quantity violated an internal invariant by more than rounding can
// explain. Signals a bug rather than bad user input.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace spinchain
