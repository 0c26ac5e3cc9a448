#pragma once

#include <span>
#include <utility>
#include <vector>

#include "aug/family.hpp"

namespace aug {

struct LeafToLeafReport {
  std::vector<std::size_t> solution;  // indices into the input link list, in order added
  std::size_t ell = 0;                // initial number of terminals (leaves)
  std::size_t ell_prime = 0;          // residual terminals when phase 1 stops
  std::size_t k = 0;                  // links added in phase 1
  std::size_t phase2_size = 0;
  std::size_t single_steps = 0;       // phase-1 iterations adding one link with >= 3 terminals
  std::size_t pair_steps = 0;         // phase-1 iterations adding a disjoint pair
  /// Residual terminal count before each phase-1 iteration and at the switch.
  std::vector<std::size_t> terminal_trace;
  bool size_bound_ok = false;         // 3|J| <= 2*ell + ell_prime - 3
  bool phase1_bound_ok = false;       // 3k <= 2(ell - ell_prime)
  bool phase2_bound_ok = false;       // phase2_size <= ell_prime - 1
};

/// Inclusion-minimal cover by reverse-delete in input order: links are tried
/// for removal from last to first. Returns positions into `links`.
/// Throws InfeasibleError when `links` is not a cover.
std::vector<std::size_t> minimal_cover(const FamilyOracle& oracle, std::span<const Link> links);

/// Leaf-to-leaf greedy. Every link must join two leaf classes and the whole
/// link set must cover the family.
LeafToLeafReport solve_leaf_to_leaf(const FamilyOracle& oracle, std::span<const Link> links);

/// (ceil(ell / 2), ell_prime - 1): both are lower bounds on the optimum.
std::pair<std::size_t, std::size_t> leaf_lower_bounds(const LeafToLeafReport& report);

}  // namespace aug
