#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aug {

using Node = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Node u;
  Node v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph. Parallel edges are allowed, self-loops are not.
/// Edge ids are dense and assigned in insertion order.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t node_count);

  EdgeId add_edge(Node u, Node v);

  std::size_t node_count() const { return incident_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Node v) const { return incident_[v]; }
  std::size_t degree(Node v) const { return incident_[v].size(); }

  Node opposite(EdgeId id, Node v) const {
    const Edge& e = edges_[id];
    return e.u == v ? e.v : e.u;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

bool is_connected(const Multigraph& g);

/// Block-cut tree of a connected graph. Tree nodes [0, blocks.size()) are
/// blocks; tree node blocks.size() + i is cutnodes[i].
struct BlockCutTree {
  std::vector<Node> cutnodes;               // sorted
  std::vector<std::vector<Node>> blocks;    // each sorted; sorted lexicographically
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::size_t> psi;             // graph node -> tree node

  std::size_t tree_size() const { return adjacency.size(); }
  bool is_block(std::size_t t) const { return t < blocks.size(); }
  bool is_cutnode(Node v) const;
};

/// Throws StructureError("graph not connected") on disconnected input.
BlockCutTree block_cut_tree(const Multigraph& g);

/// Connected, at least three nodes, and no cutnode.
bool is_2_connected(const Multigraph& g);

/// Global minimum edge cut, parallel edges counted. Requires >= 2 nodes.
std::size_t edge_connectivity(const Multigraph& g);

/// Maximum number of u-v paths that are pairwise disjoint in edges and in
/// non-terminal nodes. `is_terminal` has one flag per node.
std::size_t element_connectivity(const Multigraph& g, const std::vector<bool>& is_terminal,
                                 Node u, Node v);

/// Maximum element-disjoint flow between two disjoint terminal groups, each
/// group contracted into a single super terminal.
std::size_t element_flow(const Multigraph& g, const std::vector<bool>& is_terminal,
                         std::span<const Node> sources, std::span<const Node> sinks);

}  // namespace aug
