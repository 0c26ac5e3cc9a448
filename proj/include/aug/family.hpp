#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

#include "aug/graph.hpp"

namespace aug {

/// A candidate augmenting edge, on original node ids.
using Link = Edge;
/// Index of an inseparability class of the current (residual) family.
using ClassId = std::size_t;

// ---------------------------------------------------------------------------
// Cactus backend: the family is every side of every pair of edges that lie on
// a common cycle.

struct Cactus {
  std::size_t node_count = 0;              // cactus nodes (= current classes)
  std::vector<std::vector<Node>> cycles;   // length >= 2; a 2-cycle is a parallel pair
  std::vector<Node> class_of;              // original node -> cactus node

  /// Cactus on nodes 0..n-1 with the identity class map.
  static Cactus from_cycles(std::size_t n, std::vector<std::vector<Node>> cycles);
};

/// Throws StructureError unless every cycle is simple and has length >= 2,
/// every node lies on a cycle, and the node/cycle incidence graph is a tree.
void validate_cactus(const Cactus& c);

/// Cactus nodes whose singleton is an inclusion-minimal member, i.e. nodes
/// lying on exactly one cycle. Sorted.
std::vector<Node> cactus_leaves(const Cactus& c);

/// Squeezes the cycles on the cycle-path between the classes of e's ends.
/// Throws StructureError("link is void") when both ends share a class.
Cactus cactus_residual(const Cactus& c, Link e);

/// Applies links in order, skipping those that became void.
Cactus cactus_residual(const Cactus& c, std::span<const Link> links);

inline constexpr std::size_t kFamilyEnumerationGuard = 64;

/// Every member of the family, as sorted sets of cactus nodes, sorted and
/// deduplicated. Throws SizeGuardError above kFamilyEnumerationGuard nodes.
std::vector<std::vector<Node>> family_enumerate(const Cactus& c);

// ---------------------------------------------------------------------------
// Tree-based backends.

struct BlockTreeInstance {
  std::size_t node_count = 0;
  std::vector<Edge> tree_edges;
  std::vector<Link> links;
  std::vector<Node> terminals;
};

/// Residual instance w.r.t. links[chosen]: the tree becomes the block-cut
/// tree of T + J (tree nodes as in BlockCutTree), remaining links are mapped
/// through psi with void ones dropped, terminals become psi(R) deduplicated.
BlockTreeInstance blocktree_residual(const BlockTreeInstance& inst,
                                     std::span<const std::size_t> chosen);

/// True iff the tree paths of e and f share a tree edge.
bool tree_inseparable(const BlockTreeInstance& inst, Link e, Link f);

struct LaminarInstance {
  std::size_t node_count = 0;
  std::vector<Edge> tree_edges;
  std::vector<Link> links;
};

/// The same family as a cactus: every tree edge doubled into a 2-cycle.
Cactus laminar_as_cactus(const LaminarInstance& inst);

// ---------------------------------------------------------------------------

/// Query interface shared by all backends. Links are always given on
/// original node ids; the oracle maps them onto its current classes.
class FamilyOracle {
 public:
  virtual ~FamilyOracle() = default;

  virtual std::string_view kind() const = 0;
  virtual std::size_t ground_size() const = 0;
  virtual std::size_t class_count() const = 0;
  virtual ClassId class_of(Node v) const = 0;
  /// One representative original node per leaf class, sorted.
  virtual std::vector<Node> leaves() const = 0;
  /// C(F, e): the current classes merged into one by adding e. Sorted.
  virtual std::vector<ClassId> link_classes(Link e) const = 0;
  virtual bool inseparable(Link e, Link f) const = 0;
  virtual std::unique_ptr<FamilyOracle> residual(std::span<const Link> links) const = 0;
  /// Graph-level test: 3-edge-connectivity, 2-connectivity or
  /// 2-edge-connectivity of the underlying structure plus the links.
  virtual bool direct_feasible(std::span<const Link> links) const = 0;

  bool is_void(Link e) const { return class_of(e.u) == class_of(e.v); }
  /// Residual has a single class.
  bool is_feasible(std::span<const Link> links) const;
  /// Distinct classes of the given representatives, sorted.
  std::vector<ClassId> classes_of(std::span<const Node> nodes) const;
  /// Partition of the original nodes into current classes (empty classes
  /// omitted), each part sorted, ordered by class id.
  std::vector<std::vector<Node>> classes() const;
};

class CactusOracle final : public FamilyOracle {
 public:
  explicit CactusOracle(Cactus c);

  const Cactus& cactus() const { return cactus_; }

  std::string_view kind() const override { return "cactus"; }
  std::size_t ground_size() const override { return cactus_.class_of.size(); }
  std::size_t class_count() const override { return cactus_.node_count; }
  ClassId class_of(Node v) const override { return cactus_.class_of.at(v); }
  std::vector<Node> leaves() const override;
  std::vector<ClassId> link_classes(Link e) const override;
  bool inseparable(Link e, Link f) const override;
  std::unique_ptr<FamilyOracle> residual(std::span<const Link> links) const override;
  bool direct_feasible(std::span<const Link> links) const override;

 private:
  const std::vector<std::uint64_t>& members() const;

  Cactus cactus_;
  std::vector<Node> representative_;
  mutable std::once_flag members_once_;
  mutable std::vector<std::uint64_t> members_;
};

class BlockTreeOracle final : public FamilyOracle {
 public:
  BlockTreeOracle(std::size_t node_count, std::vector<Edge> tree_edges,
                  std::vector<Link> applied = {});

  const BlockCutTree& block_tree() const { return tree_; }

  std::string_view kind() const override { return "blocktree"; }
  std::size_t ground_size() const override { return node_count_; }
  std::size_t class_count() const override { return tree_.tree_size(); }
  ClassId class_of(Node v) const override { return tree_.psi.at(v); }
  std::vector<Node> leaves() const override;
  std::vector<ClassId> link_classes(Link e) const override;
  bool inseparable(Link e, Link f) const override;
  std::unique_ptr<FamilyOracle> residual(std::span<const Link> links) const override;
  bool direct_feasible(std::span<const Link> links) const override;

 private:
  std::size_t node_count_;
  std::vector<Edge> tree_edges_;
  std::vector<Link> applied_;
  BlockCutTree tree_;
};

class LaminarOracle final : public FamilyOracle {
 public:
  LaminarOracle(std::size_t node_count, std::vector<Edge> tree_edges,
                std::vector<Link> applied = {});

  std::string_view kind() const override { return "laminar"; }
  std::size_t ground_size() const override { return node_count_; }
  std::size_t class_count() const override { return class_adjacency_.size(); }
  ClassId class_of(Node v) const override { return class_of_.at(v); }
  std::vector<Node> leaves() const override;
  std::vector<ClassId> link_classes(Link e) const override;
  bool inseparable(Link e, Link f) const override;
  std::unique_ptr<FamilyOracle> residual(std::span<const Link> links) const override;
  bool direct_feasible(std::span<const Link> links) const override;

 private:
  std::size_t node_count_;
  std::vector<Edge> tree_edges_;
  std::vector<Link> applied_;
  std::vector<ClassId> class_of_;
  std::vector<Node> representative_;
  std::vector<std::vector<ClassId>> class_adjacency_;
};

/// Nodes on the unique path between two nodes of a tree given by adjacency
/// lists, endpoints included, in path order.
std::vector<std::size_t> tree_path(const std::vector<std::vector<std::size_t>>& adjacency,
                                   std::size_t from, std::size_t to);

}  // namespace aug
