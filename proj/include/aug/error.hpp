#pragma once

#include <stdexcept>

namespace aug {

/// The instance admits no feasible solution (the link set does not cover the
/// family, or degree bounds are not a transversal).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (malformed cactus, void link,
/// disconnected graph where a connected one is required).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential routine was asked to run above its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aug
