#pragma once

#include <span>
#include <vector>

#include "aug/family.hpp"

namespace aug {

/// Graph on link-nodes and terminal-nodes. Node ids [0, link_count()) are
/// link-nodes, the rest are terminal-nodes.
class IncidenceGraph {
 public:
  IncidenceGraph(std::size_t link_nodes, std::size_t terminal_nodes);

  void add_edge(std::size_t a, std::size_t b);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t link_count() const { return link_count_; }
  std::size_t terminal_count() const { return node_count() - link_count_; }
  bool is_terminal(std::size_t x) const { return x >= link_count_; }
  std::size_t terminal_node(std::size_t i) const { return link_count_ + i; }
  bool adjacent(std::size_t a, std::size_t b) const;
  const std::vector<std::size_t>& neighbors(std::size_t x) const { return adjacency_[x]; }
  /// Terminal-nodes adjacent to a link-node, as terminal node ids. Sorted.
  std::vector<std::size_t> terminal_neighbors(std::size_t x) const;

  /// Position of each link-node in the link list it was built from.
  std::vector<std::size_t> link_index;
  /// Representative original node of each terminal-node.
  std::vector<Node> terminal_rep;

 private:
  std::size_t link_count_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Links of `links` that are not void in `oracle`, with their positions.
struct NormalizedLinks {
  std::vector<Link> links;
  std::vector<std::size_t> original_index;
};
NormalizedLinks normalize_links(const FamilyOracle& oracle, std::span<const Link> links);

/// (R, E, F)-incidence graph. `terminals` are representatives; duplicates of
/// one class collapse. Throws StructureError on a void link or when some
/// leaf class is not a terminal.
IncidenceGraph build_incidence(const FamilyOracle& oracle, std::span<const Node> terminals,
                               std::span<const Link> links);

/// H[J + R] connected; `chosen` are link-node ids.
bool sscds_feasible(const IncidenceGraph& h, std::span<const std::size_t> chosen);

/// The neighbourhood of every terminal induces a clique.
bool check_property_star(const IncidenceGraph& h);

struct IncidenceEdge {
  std::size_t a;
  std::size_t b;
};

/// Converts a Steiner tree spanning all terminals into a connected dominating
/// set of exactly |tree| - |R| + 1 link-nodes. Requires every terminal neighbourhood to be a clique.
std::vector<std::size_t> steiner_to_sscds(const IncidenceGraph& h,
                                          std::span<const IncidenceEdge> tree);

/// Converts a connected dominating set into a Steiner tree of exactly
/// |S| + |R| - 1 edges.
std::vector<IncidenceEdge> sscds_to_steiner(const IncidenceGraph& h,
                                            std::span<const std::size_t> chosen);

}  // namespace aug
