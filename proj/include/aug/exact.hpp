#pragma once

#include <span>
#include <vector>

#include "aug/family.hpp"
#include "aug/sfcover.hpp"

namespace aug {

inline constexpr std::size_t kExactLinkGuard = 20;

/// Minimum cover as indices into `links`, by increasing size over subsets
/// that form forests on the original nodes. Ties go to the first subset in
/// lexicographic index order. Throws InfeasibleError / SizeGuardError.
std::vector<std::size_t> exact_min_cover(const FamilyOracle& oracle, std::span<const Link> links,
                                         std::size_t guard = kExactLinkGuard);

/// Same optimum over all 2^|E| subsets, with no pruning. At most 16 links.
std::vector<std::size_t> exhaustive_min_cover(const FamilyOracle& oracle,
                                              std::span<const Link> links);

struct SfExactGuard {
  std::size_t max_support = 8;  // |T_g|
  int max_weight = 24;          // t = g(S)
};

/// Minimum edge multiset covering p. Edges join elements of the support of
/// a minimal transversal; branch and bound with the greedy solution as the
/// starting upper bound and half the residual subpartition maximum as the
/// lower bound.
std::vector<Edge> exact_min_sfcover(const std::shared_ptr<const SetFunction>& p,
                                    SfExactGuard guard = {});

/// Minimum cover by iterative deepening over multisets of arbitrary pairs of
/// the ground set. Ground size <= 5, at most `max_edges` edges.
std::vector<Edge> exhaustive_min_sfcover(const SetFunction& p, std::size_t max_edges = 6);

}  // namespace aug
