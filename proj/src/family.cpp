#include "aug/family.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "aug/error.hpp"

namespace aug {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Bipartite node/cycle incidence graph: ids [0, n) are cactus nodes,
// n + i is cycle i.
std::vector<std::vector<std::size_t>> cycle_tree(const Cactus& c) {
  std::vector<std::vector<std::size_t>> adj(c.node_count + c.cycles.size());
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    for (Node x : c.cycles[i]) {
      adj[x].push_back(c.node_count + i);
      adj[c.node_count + i].push_back(x);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::pair<std::size_t, std::size_t>> path_edges(const std::vector<std::size_t>& path) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.emplace_back(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool share_edge(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  const auto a = path_edges(p);
  const auto b = path_edges(q);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

std::vector<std::vector<std::size_t>> adjacency_of(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

void require_spanning_tree(std::size_t n, std::span<const Edge> edges) {
  if (n == 0 || edges.size() + 1 != n) throw StructureError("tree edges do not form a spanning tree");
  Multigraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  if (!is_connected(g)) throw StructureError("tree edges do not form a spanning tree");
}

std::vector<std::uint64_t> enumerate_masks(const Cactus& c) {
  if (c.node_count > kFamilyEnumerationGuard) {
    throw SizeGuardError("family enumeration limited to 64 cactus nodes");
  }
  const std::size_t n = c.node_count;
  const auto adj = cycle_tree(c);

  std::set<std::uint64_t> found;
  for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
    const auto& cyc = c.cycles[ci];
    const std::size_t cycle_id = n + ci;
    // hanging[t]: nodes reachable from cyc[t] without entering this cycle.
    std::vector<std::uint64_t> hanging(cyc.size(), 0);
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      std::vector<std::size_t> stack{cyc[t]};
      std::vector<bool> seen(adj.size(), false);
      seen[cyc[t]] = true;
      seen[cycle_id] = true;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        if (x < n) hanging[t] |= std::uint64_t{1} << x;
        for (std::size_t y : adj[x]) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    std::uint64_t all = 0;
    for (auto h : hanging) all |= h;
    // Removing cycle edges i=(c_i,c_{i+1}) and j leaves arc c_{i+1..j}.
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint64_t side = 0;
      for (std::size_t j = i + 1; j < cyc.size(); ++j) {
        side |= hanging[j];
        found.insert(side);
        found.insert(all & ~side);
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<std::size_t> tree_path(const std::vector<std::vector<std::size_t>>& adjacency,
                                   std::size_t from, std::size_t to) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(adjacency.size(), kNone);
  std::queue<std::size_t> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty() && parent[to] == kNone) {
    const std::size_t x = q.front();
    q.pop();
    for (std::size_t y : adjacency[x]) {
      if (parent[y] == kNone) {
        parent[y] = x;
        q.push(y);
      }
    }
  }
  if (parent[to] == kNone) throw StructureError("tree path: nodes not connected");
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------

Cactus Cactus::from_cycles(std::size_t n, std::vector<std::vector<Node>> cycles) {
  Cactus c;
  c.node_count = n;
  c.cycles = std::move(cycles);
  c.class_of.resize(n);
  std::iota(c.class_of.begin(), c.class_of.end(), Node{0});
  return c;
}

void validate_cactus(const Cactus& c) {
  if (c.node_count == 0) throw StructureError("cactus has no nodes");
  std::vector<bool> hit(c.node_count, false);
  for (Node x : c.class_of) {
    if (x >= c.node_count) throw StructureError("cactus class map out of range");
    hit[x] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw StructureError("cactus node without original node");
  }
  std::size_t incidences = 0;
  for (const auto& cyc : c.cycles) {
    if (cyc.size() < 2) throw StructureError("cactus cycle shorter than 2");
    std::vector<Node> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw StructureError("cactus cycle repeats a node");
    }
    if (sorted.back() >= c.node_count) throw StructureError("cactus cycle node out of range");
    incidences += cyc.size();
  }
  const std::size_t tree_nodes = c.node_count + c.cycles.size();
  if (incidences + 1 != tree_nodes) throw StructureError("cactus is not a tree of cycles");
  const auto adj = cycle_tree(c);
  std::vector<bool> seen(tree_nodes, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != tree_nodes) throw StructureError("cactus is not connected");
}

std::vector<Node> cactus_leaves(const Cactus& c) {
  validate_cactus(c);
  std::vector<std::size_t> on(c.node_count, 0);
  for (const auto& cyc : c.cycles) {
    for (Node x : cyc) ++on[x];
  }
  std::vector<Node> out;
  for (Node x = 0; x < c.node_count; ++x) {
    if (on[x] == 1) out.push_back(x);
  }
  return out;
}

Cactus cactus_residual(const Cactus& c, Link e) {
  const Node cu = c.class_of.at(e.u);
  const Node cv = c.class_of.at(e.v);
  if (cu == cv) throw StructureError("link is void");
  const std::size_t n = c.node_count;
  const auto path = tree_path(cycle_tree(c), cu, cv);

  UnionFind uf(n);
  std::vector<std::pair<Node, Node>> attach(c.cycles.size(), {n, n});
  std::vector<bool> squeezed(c.cycles.size(), false);
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    const std::size_t ci = path[i] - n;
    squeezed[ci] = true;
    attach[ci] = {path[i - 1], path[i + 1]};
    uf.unite(path[i - 1], path[i + 1]);
  }

  std::vector<std::vector<Node>> pieces;
  for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
    const auto& cyc = c.cycles[ci];
    if (!squeezed[ci]) {
      pieces.push_back(cyc);
      continue;
    }
    // Rotate so the first attachment sits at index 0; b is at index j.
    const auto a_it = std::find(cyc.begin(), cyc.end(), attach[ci].first);
    std::vector<Node> rot(a_it, cyc.end());
    rot.insert(rot.end(), cyc.begin(), a_it);
    const std::size_t j =
        static_cast<std::size_t>(std::find(rot.begin(), rot.end(), attach[ci].second) - rot.begin());
    std::vector<Node> first(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<Node> second{rot[0]};
    second.insert(second.end(), rot.begin() + static_cast<std::ptrdiff_t>(j) + 1, rot.end());
    // Pieces of length 1 would be self-loops.
    if (first.size() >= 2) pieces.push_back(std::move(first));
    if (second.size() >= 2) pieces.push_back(std::move(second));
  }

  std::vector<Node> relabel(n, n);
  std::size_t next = 0;
  for (Node x = 0; x < n; ++x) {
    const Node r = uf.find(x);
    if (relabel[r] == n) relabel[r] = next++;
    relabel[x] = relabel[r];
  }

  Cactus out;
  out.node_count = next;
  for (auto& piece : pieces) {
    for (Node& x : piece) x = relabel[x];
    out.cycles.push_back(std::move(piece));
  }
  out.class_of.resize(c.class_of.size());
  for (std::size_t v = 0; v < c.class_of.size(); ++v) out.class_of[v] = relabel[c.class_of[v]];
  return out;
}

Cactus cactus_residual(const Cactus& c, std::span<const Link> links) {
  Cactus cur = c;
  for (const Link& e : links) {
    if (cur.class_of.at(e.u) != cur.class_of.at(e.v)) cur = cactus_residual(cur, e);
  }
  return cur;
}

std::vector<std::vector<Node>> family_enumerate(const Cactus& c) {
  validate_cactus(c);
  std::vector<std::vector<Node>> out;
  for (std::uint64_t m : enumerate_masks(c)) {
    std::vector<Node> set;
    for (Node x = 0; x < c.node_count; ++x) {
      if (m >> x & 1U) set.push_back(x);
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

BlockTreeInstance blocktree_residual(const BlockTreeInstance& inst,
                                     std::span<const std::size_t> chosen) {
  require_spanning_tree(inst.node_count, inst.tree_edges);
  Multigraph g(inst.node_count);
  for (const Edge& e : inst.tree_edges) g.add_edge(e.u, e.v);
  std::vector<bool> in_j(inst.links.size(), false);
  for (std::size_t i : chosen) {
    const Link& l = inst.links.at(i);
    g.add_edge(l.u, l.v);
    in_j[i] = true;
  }
  const BlockCutTree t = block_cut_tree(g);

  BlockTreeInstance out;
  out.node_count = t.tree_size();
  for (std::size_t x = 0; x < t.tree_size(); ++x) {
    for (std::size_t y : t.adjacency[x]) {
      if (x < y) out.tree_edges.push_back({x, y});
    }
  }
  for (std::size_t i = 0; i < inst.links.size(); ++i) {
    if (in_j[i]) continue;
    const Node a = t.psi[inst.links[i].u];
    const Node b = t.psi[inst.links[i].v];
    if (a != b) out.links.push_back({a, b});
  }
  for (Node r : inst.terminals) out.terminals.push_back(t.psi.at(r));
  std::sort(out.terminals.begin(), out.terminals.end());
  out.terminals.erase(std::unique(out.terminals.begin(), out.terminals.end()), out.terminals.end());
  return out;
}

bool tree_inseparable(const BlockTreeInstance& inst, Link e, Link f) {
  const auto adj = adjacency_of(inst.node_count, inst.tree_edges);
  return share_edge(tree_path(adj, e.u, e.v), tree_path(adj, f.u, f.v));
}

Cactus laminar_as_cactus(const LaminarInstance& inst) {
  std::vector<std::vector<Node>> cycles;
  for (const Edge& e : inst.tree_edges) cycles.push_back({e.u, e.v});
  return Cactus::from_cycles(inst.node_count, std::move(cycles));
}

// ---------------------------------------------------------------------------

bool FamilyOracle::is_feasible(std::span<const Link> links) const {
  return residual(links)->class_count() == 1;
}

std::vector<ClassId> FamilyOracle::classes_of(std::span<const Node> nodes) const {
  std::vector<ClassId> out;
  out.reserve(nodes.size());
  for (Node v : nodes) out.push_back(class_of(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Node>> FamilyOracle::classes() const {
  std::vector<std::vector<Node>> by_class(class_count());
  for (Node v = 0; v < ground_size(); ++v) by_class[class_of(v)].push_back(v);
  std::erase_if(by_class, [](const auto& part) { return part.empty(); });
  return by_class;
}

// ---------------------------------------------------------------------------

CactusOracle::CactusOracle(Cactus c) : cactus_(std::move(c)) {
  validate_cactus(cactus_);
  representative_.assign(cactus_.node_count, cactus_.class_of.size());
  for (Node v = cactus_.class_of.size(); v-- > 0;) representative_[cactus_.class_of[v]] = v;
}

const std::vector<std::uint64_t>& CactusOracle::members() const {
  std::call_once(members_once_, [this] { members_ = enumerate_masks(cactus_); });
  return members_;
}

std::vector<Node> CactusOracle::leaves() const {
  std::vector<Node> out;
  for (Node x : cactus_leaves(cactus_)) out.push_back(representative_[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassId> CactusOracle::link_classes(Link e) const {
  const ClassId cu = class_of(e.u);
  const ClassId cv = class_of(e.v);
  const auto& fam = members();
  std::vector<ClassId> out;
  for (ClassId w = 0; w < cactus_.node_count; ++w) {
    bool together = true;
    for (std::uint64_t a : fam) {
      const bool in_u = a >> cu & 1U;
      if (in_u != static_cast<bool>(a >> cv & 1U)) continue;  // covered by e
      if (in_u != static_cast<bool>(a >> w & 1U)) {
        together = false;
        break;
      }
    }
    if (together) out.push_back(w);
  }
  return out;
}

bool CactusOracle::inseparable(Link e, Link f) const {
  const ClassId eu = class_of(e.u), ev = class_of(e.v);
  const ClassId fu = class_of(f.u), fv = class_of(f.v);
  for (std::uint64_t a : members()) {
    const bool e1 = a >> eu & 1U, e2 = a >> ev & 1U;
    const bool f1 = a >> fu & 1U, f2 = a >> fv & 1U;
    if ((e1 && e2 && !f1 && !f2) || (f1 && f2 && !e1 && !e2)) return false;
  }
  return true;
}

std::unique_ptr<FamilyOracle> CactusOracle::residual(std::span<const Link> links) const {
  return std::make_unique<CactusOracle>(cactus_residual(cactus_, links));
}

bool CactusOracle::direct_feasible(std::span<const Link> links) const {
  if (cactus_.node_count <= 1) return true;
  Multigraph g(cactus_.node_count);
  for (const auto& cyc : cactus_.cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) g.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  for (const Link& e : links) {
    if (!is_void(e)) g.add_edge(class_of(e.u), class_of(e.v));
  }
  return edge_connectivity(g) >= 3;
}

// ---------------------------------------------------------------------------

namespace {

Multigraph tree_plus(std::size_t n, std::span<const Edge> tree, std::span<const Link> a,
                     std::span<const Link> b) {
  Multigraph g(n);
  for (const Edge& e : tree) g.add_edge(e.u, e.v);
  for (const Link& e : a) g.add_edge(e.u, e.v);
  for (const Link& e : b) g.add_edge(e.u, e.v);
  return g;
}

}  // namespace

BlockTreeOracle::BlockTreeOracle(std::size_t node_count, std::vector<Edge> tree_edges,
                                 std::vector<Link> applied)
    : node_count_(node_count), tree_edges_(std::move(tree_edges)), applied_(std::move(applied)) {
  if (node_count_ < 3) throw StructureError("block-tree instance needs at least 3 nodes");
  require_spanning_tree(node_count_, tree_edges_);
  tree_ = block_cut_tree(tree_plus(node_count_, tree_edges_, applied_, {}));
}

std::vector<Node> BlockTreeOracle::leaves() const {
  std::vector<Node> out;
  if (tree_.tree_size() <= 1) return out;
  for (std::size_t t = 0; t < tree_.tree_size(); ++t) {
    if (tree_.adjacency[t].size() != 1) continue;
    for (Node v : tree_.blocks[t]) {
      if (!tree_.is_cutnode(v)) {
        out.push_back(v);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassId> BlockTreeOracle::link_classes(Link e) const {
  auto path = tree_path(tree_.adjacency, class_of(e.u), class_of(e.v));
  std::sort(path.begin(), path.end());
  return path;
}

bool BlockTreeOracle::inseparable(Link e, Link f) const {
  return share_edge(tree_path(tree_.adjacency, class_of(e.u), class_of(e.v)),
                    tree_path(tree_.adjacency, class_of(f.u), class_of(f.v)));
}

std::unique_ptr<FamilyOracle> BlockTreeOracle::residual(std::span<const Link> links) const {
  std::vector<Link> all = applied_;
  all.insert(all.end(), links.begin(), links.end());
  return std::make_unique<BlockTreeOracle>(node_count_, tree_edges_, std::move(all));
}

bool BlockTreeOracle::direct_feasible(std::span<const Link> links) const {
  return is_2_connected(tree_plus(node_count_, tree_edges_, applied_, links));
}

// ---------------------------------------------------------------------------

LaminarOracle::LaminarOracle(std::size_t node_count, std::vector<Edge> tree_edges,
                             std::vector<Link> applied)
    : node_count_(node_count), tree_edges_(std::move(tree_edges)), applied_(std::move(applied)) {
  require_spanning_tree(node_count_, tree_edges_);
  const auto adj = adjacency_of(node_count_, tree_edges_);
  UnionFind uf(node_count_);
  for (const Link& e : applied_) {
    const auto path = tree_path(adj, e.u, e.v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) uf.unite(path[i], path[i + 1]);
  }
  class_of_.assign(node_count_, node_count_);
  std::vector<ClassId> id_of_root(node_count_, node_count_);
  std::size_t next = 0;
  for (Node v = 0; v < node_count_; ++v) {
    const std::size_t r = uf.find(v);
    if (id_of_root[r] == node_count_) {
      id_of_root[r] = next++;
      representative_.push_back(v);
    }
    class_of_[v] = id_of_root[r];
  }
  class_adjacency_.assign(next, {});
  for (const Edge& e : tree_edges_) {
    const ClassId a = class_of_[e.u], b = class_of_[e.v];
    if (a != b) {
      class_adjacency_[a].push_back(b);
      class_adjacency_[b].push_back(a);
    }
  }
  for (auto& a : class_adjacency_) std::sort(a.begin(), a.end());
}

std::vector<Node> LaminarOracle::leaves() const {
  std::vector<Node> out;
  if (class_count() <= 1) return out;
  for (ClassId c = 0; c < class_count(); ++c) {
    if (class_adjacency_[c].size() == 1) out.push_back(representative_[c]);
  }
  return out;
}

std::vector<ClassId> LaminarOracle::link_classes(Link e) const {
  auto path = tree_path(class_adjacency_, class_of(e.u), class_of(e.v));
  std::sort(path.begin(), path.end());
  return path;
}

bool LaminarOracle::inseparable(Link e, Link f) const {
  // A subtree side holding a whole path holds every node of it, so a shared
  // node always puts an end of the other link inside.
  std::vector<ClassId> pe = tree_path(class_adjacency_, class_of(e.u), class_of(e.v));
  std::vector<ClassId> pf = tree_path(class_adjacency_, class_of(f.u), class_of(f.v));
  std::sort(pe.begin(), pe.end());
  std::sort(pf.begin(), pf.end());
  std::vector<ClassId> common;
  std::set_intersection(pe.begin(), pe.end(), pf.begin(), pf.end(), std::back_inserter(common));
  return !common.empty();
}

std::unique_ptr<FamilyOracle> LaminarOracle::residual(std::span<const Link> links) const {
  std::vector<Link> all = applied_;
  all.insert(all.end(), links.begin(), links.end());
  return std::make_unique<LaminarOracle>(node_count_, tree_edges_, std::move(all));
}

bool LaminarOracle::direct_feasible(std::span<const Link> links) const {
  if (node_count_ < 2) return true;
  return edge_connectivity(tree_plus(node_count_, tree_edges_, applied_, links)) >= 2;
}

}  // namespace aug
