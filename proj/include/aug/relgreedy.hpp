#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aug/family.hpp"
#include "aug/incidence.hpp"

namespace aug {

/// Terminal set for the potential |R^J| - 1: the leaves plus every endpoint
/// of a cheap cover, where a link costs 0 with both ends on leaves, 1 with
/// one, 2 otherwise.
struct TerminalSelection {
  std::vector<Node> terminals;        // one representative per class, sorted by class
  std::vector<std::size_t> cover;     // the cover whose endpoints were used
  std::size_t cover_cost = 0;
  std::size_t leaf_count = 0;
  bool exact = false;                 // cover is cost-optimal
};

inline constexpr std::size_t kExactTerminalGuard = 20;

/// `exact` enumerates covers by brute force (at most kExactTerminalGuard
/// links); otherwise reverse-delete drops the most expensive links first.
TerminalSelection select_terminals(const FamilyOracle& oracle, std::span<const Link> links,
                                   bool exact = false);

/// |R^J| - 1.
std::size_t potential(const FamilyOracle& oracle, std::span<const Node> terminals,
                      std::span<const Link> chosen);

struct DensityCandidate {
  std::vector<std::size_t> seed;      // the enumerated subset P' (link-node ids)
  std::vector<std::size_t> nodes;     // link-nodes of the expanded subtree
  std::size_t s = 0;                  // non-terminal count
  std::size_t r = 0;                  // terminals adjacent to the subtree
  double density() const { return static_cast<double>(s) / static_cast<double>(r - 1); }
};

/// Minimum-density connected candidate: for every seed set of link-nodes of
/// size 1, 2 or in [k, 3k], an MST of the seeds in the metric completion
/// (distance = intermediate link-nodes + 1; terminals are free) is expanded
/// into shortest paths and scored s / (r - 1). Returns nullopt when no
/// candidate reaches two terminals.
std::optional<DensityCandidate> best_density_subtree(const IncidenceGraph& h, std::size_t k);

struct GreedyIteration {
  std::vector<std::size_t> added;     // indices into the input link list
  std::size_t nu_before = 0;
  std::size_t nu_after = 0;
  double estimated_density = 0;       // s / (r - 1) of the candidate
  double density() const {
    return static_cast<double>(added.size()) / static_cast<double>(nu_before - nu_after);
  }
};

struct RelativeGreedyReport {
  std::vector<std::size_t> solution;  // indices into the input link list
  TerminalSelection selection;
  std::size_t nu_initial = 0;
  std::size_t greedy_size = 0;        // tau(A)
  std::size_t nu_final = 0;           // nu(A)
  std::size_t completion_size = 0;
  std::vector<GreedyIteration> trace;
  /// Every iteration enumerated every connected seed set (3k >= active links).
  bool exhaustive = true;
};

inline constexpr std::size_t kDefaultK = 2;

RelativeGreedyReport relative_greedy(const FamilyOracle& oracle, std::span<const Link> links,
                                     std::size_t k = kDefaultK, bool exact_terminals = false);

struct CombinedRatio {
  double x = 0;
  double ratio = 0;
};

/// Solves 1 + ln(4 - x) = alpha + (alpha - 1) x on (0, 2] by bisection,
/// clamping to 2 when the root lies beyond; requires 1 < alpha < 2.
CombinedRatio combined_ratio(double alpha);

}  // namespace aug
