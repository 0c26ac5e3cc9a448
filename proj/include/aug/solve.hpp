#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aug/instance.hpp"

namespace aug {

/// Result of checking a proposed solution against an instance.
struct Verdict {
  bool feasible = false;      // primary test (direct graph connectivity)
  bool cross_check = false;   // independent second test
  bool agree = false;
  std::string method;         // names the two tests
};

/// Family instances: direct 3-edge-/2-connectivity test plus the incidence
/// graph test. Element connectivity: p-cover test plus pairwise element
/// connectivity. Explicit set functions: p-cover test only.
/// Edges use the in-memory convention of solution_from_json.
Verdict verify(const Instance& inst, const std::vector<Edge>& edges);

struct SolveOptions {
  std::string alg;            // leaf2leaf | relgreedy | sfcover; empty picks by instance
  std::size_t k = 2;
  bool degree_bounded = false;
  bool exact_terminals = false;
  bool literal = false;       // sfcover without re-minimalization
};

struct SolveOutcome {
  std::string alg;
  std::vector<Edge> edges;
  nlohmann::json report;      // algorithm-specific run data
  bool certificates_ok = true;
};

/// Runs the chosen algorithm. Throws InfeasibleError when the instance has
/// no solution and std::invalid_argument for an unsuitable algorithm.
SolveOutcome solve(const Instance& inst, const SolveOptions& options);

/// Algorithm used when none is named: leaf2leaf if every link joins two
/// leaves, relgreedy for other family instances, sfcover otherwise.
std::string default_algorithm(const Instance& inst);

/// Optimum size by the exact oracles, or nullopt above the guard.
std::optional<std::size_t> optimum_size(const Instance& inst, std::size_t link_guard);

}  // namespace aug
