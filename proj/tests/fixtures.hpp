#pragma once

// Random-instance helpers shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <numeric>
#include <vector>

#include "aug/generate.hpp"
#include "aug/incidence.hpp"
#include "aug/instance.hpp"
#include "oracles.hpp"

namespace fixture {

using aug::IncidenceEdge;
using aug::IncidenceGraph;
using aug::Rng;

/// Random spanning tree of H[nodes] (link-node and terminal ids mixed),
/// grown by random frontier edges. Empty when the induced graph is not
/// connected.
inline std::vector<IncidenceEdge> random_spanning_tree(const IncidenceGraph& h,
                                                       const std::vector<std::size_t>& nodes,
                                                       Rng& rng) {
  std::vector<bool> allowed(h.node_count(), false), reached(h.node_count(), false);
  for (std::size_t x : nodes) allowed[x] = true;
  std::vector<IncidenceEdge> tree;
  if (nodes.empty()) return tree;
  reached[nodes[aug::draw(rng, 0, nodes.size() - 1)]] = true;
  for (std::size_t grown = 1; grown < nodes.size(); ++grown) {
    std::vector<IncidenceEdge> frontier;
    for (std::size_t x : nodes) {
      if (!reached[x]) continue;
      for (std::size_t y : h.neighbors(x)) {
        if (allowed[y] && !reached[y]) frontier.push_back({x, y});
      }
    }
    if (frontier.empty()) return {};
    const IncidenceEdge e = frontier[aug::draw(rng, 0, frontier.size() - 1)];
    reached[e.b] = true;
    tree.push_back(e);
  }
  return tree;
}

/// Repeatedly removes link-node leaves, so the result is a Steiner tree on
/// the terminals whose leaves are all terminals.
inline std::vector<IncidenceEdge> prune_link_leaves(const IncidenceGraph& h,
                                                    std::vector<IncidenceEdge> tree) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> degree(h.node_count(), 0);
    for (const IncidenceEdge& e : tree) {
      ++degree[e.a];
      ++degree[e.b];
    }
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const IncidenceEdge e = tree[i];
      const bool a_leaf = !h.is_terminal(e.a) && degree[e.a] == 1;
      const bool b_leaf = !h.is_terminal(e.b) && degree[e.b] == 1;
      if (a_leaf || b_leaf) {
        tree.erase(tree.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return tree;
}

inline std::vector<std::size_t> terminal_ids(const IncidenceGraph& h) {
  std::vector<std::size_t> out(h.terminal_count());
  std::iota(out.begin(), out.end(), h.link_count());
  return out;
}

inline std::vector<std::size_t> subset(std::uint32_t mask, std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (mask >> i & 1U) out.push_back(i);
  }
  return out;
}

/// Feasibility of T + J straight from cut enumeration, independent of the
/// library's connectivity code.
inline bool brute_feasible(const aug::FamilyInstance& inst, const std::vector<aug::Link>& j) {
  switch (inst.kind) {
    case aug::FamilyKind::cactus:
      return oracle::min_cut(inst.nodes, oracle::join(oracle::cactus_edges(inst.cycles), j)) >= 3;
    case aug::FamilyKind::blocktree:
      return oracle::two_node_connected(inst.nodes, oracle::join(inst.tree_edges, j));
    case aug::FamilyKind::laminar:
      return oracle::min_cut(inst.nodes, oracle::join(inst.tree_edges, j)) >= 2;
  }
  return false;
}

inline std::size_t brute_opt(const aug::FamilyInstance& inst) {
  return oracle::min_subset(inst.links,
                            [&inst](const std::vector<aug::Edge>& j) { return brute_feasible(inst, j); });
}

inline std::vector<aug::Link> pick(const std::vector<aug::Link>& links,
                                   const std::vector<std::size_t>& idx) {
  std::vector<aug::Link> out;
  for (std::size_t i : idx) out.push_back(links[i]);
  return out;
}

}  // namespace fixture
