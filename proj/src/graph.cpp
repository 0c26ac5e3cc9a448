#include "aug/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "aug/error.hpp"

namespace aug {

Multigraph::Multigraph(std::size_t node_count) : incident_(node_count) {}

EdgeId Multigraph::add_edge(Node u, Node v) {
  if (u >= node_count() || v >= node_count()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  const EdgeId id = edges_.size();
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

bool is_connected(const Multigraph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Node> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node x = stack.back();
    stack.pop_back();
    for (EdgeId id : g.incident(x)) {
      const Node y = g.opposite(id, x);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

bool BlockCutTree::is_cutnode(Node v) const {
  return std::binary_search(cutnodes.begin(), cutnodes.end(), v);
}

namespace {

// Hopcroft-Tarjan biconnected components, edge-stack variant. Recursion depth
// is bounded by the node count, which is small for every caller.
class BlockFinder {
 public:
  explicit BlockFinder(const Multigraph& g)
      : g_(g), disc_(g.node_count(), kUnseen), low_(g.node_count(), 0),
        cut_(g.node_count(), false) {}

  void run(Node root) {
    std::size_t children = 0;
    disc_[root] = low_[root] = timer_++;
    for (EdgeId id : g_.incident(root)) {
      const Node y = g_.opposite(id, root);
      if (disc_[y] == kUnseen) {
        ++children;
        stack_.push_back(id);
        visit(y, id);
        pop_block(id);
      }
    }
    if (children >= 2) cut_[root] = true;
  }

  std::vector<std::vector<Node>> blocks;
  const std::vector<bool>& cut() const { return cut_; }

 private:
  static constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

  void visit(Node x, EdgeId parent_edge) {
    disc_[x] = low_[x] = timer_++;
    for (EdgeId id : g_.incident(x)) {
      if (id == parent_edge) continue;
      const Node y = g_.opposite(id, x);
      if (disc_[y] == kUnseen) {
        stack_.push_back(id);
        visit(y, id);
        low_[x] = std::min(low_[x], low_[y]);
        if (low_[y] >= disc_[x]) {
          cut_[x] = true;
          pop_block(id);
        }
      } else if (disc_[y] < disc_[x]) {
        stack_.push_back(id);
        low_[x] = std::min(low_[x], disc_[y]);
      }
    }
  }

  void pop_block(EdgeId until) {
    std::vector<Node> nodes;
    while (true) {
      const EdgeId id = stack_.back();
      stack_.pop_back();
      nodes.push_back(g_.edge(id).u);
      nodes.push_back(g_.edge(id).v);
      if (id == until) break;
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    blocks.push_back(std::move(nodes));
  }

  const Multigraph& g_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::vector<bool> cut_;
  std::vector<EdgeId> stack_;
  std::size_t timer_ = 0;
};

}  // namespace

BlockCutTree block_cut_tree(const Multigraph& g) {
  if (g.node_count() == 0 || !is_connected(g)) throw StructureError("graph not connected");

  BlockCutTree t;
  if (g.node_count() == 1) {
    t.blocks = {{0}};
    t.adjacency.resize(1);
    t.psi = {0};
    return t;
  }

  BlockFinder finder(g);
  finder.run(0);
  const std::vector<bool>& cut = finder.cut();

  t.blocks = std::move(finder.blocks);
  std::sort(t.blocks.begin(), t.blocks.end());
  for (Node v = 0; v < g.node_count(); ++v) {
    if (cut[v]) t.cutnodes.push_back(v);
  }

  const std::size_t nb = t.blocks.size();
  t.adjacency.assign(nb + t.cutnodes.size(), {});
  t.psi.assign(g.node_count(), 0);
  for (std::size_t i = 0; i < t.cutnodes.size(); ++i) t.psi[t.cutnodes[i]] = nb + i;
  for (std::size_t b = 0; b < nb; ++b) {
    for (Node v : t.blocks[b]) {
      if (cut[v]) {
        const std::size_t c = t.psi[v];
        t.adjacency[b].push_back(c);
        t.adjacency[c].push_back(b);
      } else {
        t.psi[v] = b;
      }
    }
  }
  for (auto& adj : t.adjacency) std::sort(adj.begin(), adj.end());
  return t;
}

bool is_2_connected(const Multigraph& g) {
  if (g.node_count() < 3 || !is_connected(g)) return false;
  return block_cut_tree(g).cutnodes.empty();
}

namespace {

// Directed network with integer capacities; BFS augmenting paths. All
// callers have unit or tiny capacities so path counts stay small.
class FlowNetwork {
 public:
  static constexpr long long kInf = std::numeric_limits<int>::max();

  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  void add_arc(std::size_t from, std::size_t to, long long cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::size_t max_flow(std::size_t s, std::size_t t, std::size_t limit) {
    std::size_t flow = 0;
    std::vector<std::size_t> via(adj_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), kNone);
      std::queue<std::size_t> q;
      q.push(s);
      via[s] = kSource;
      while (!q.empty() && via[t] == kNone) {
        const std::size_t x = q.front();
        q.pop();
        for (std::size_t a : adj_[x]) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == kNone) {
            via[arcs_[a].to] = a;
            q.push(arcs_[a].to);
          }
        }
      }
      if (via[t] == kNone) break;
      for (std::size_t x = t; x != s;) {
        const std::size_t a = via[x];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kSource = kNone - 1;

  struct Arc {
    std::size_t to;
    long long cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

// Split network: node x becomes in(x)=2x, out(x)=2x+1.
FlowNetwork split_network(const Multigraph& g, const std::vector<bool>& is_terminal,
                          std::size_t extra) {
  FlowNetwork net(2 * g.node_count() + extra);
  for (Node x = 0; x < g.node_count(); ++x) {
    net.add_arc(2 * x, 2 * x + 1, is_terminal[x] ? FlowNetwork::kInf : 1);
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return net;
}

}  // namespace

std::size_t edge_connectivity(const Multigraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("edge connectivity needs at least two nodes");
  std::size_t best = g.edge_count();
  for (Node t = 1; t < n; ++t) {
    FlowNetwork net(n);
    for (const Edge& e : g.edges()) {
      net.add_arc(e.u, e.v, 1);
      net.add_arc(e.v, e.u, 1);
    }
    best = std::min(best, net.max_flow(0, t, best));
    if (best == 0) break;
  }
  return best;
}

std::size_t element_connectivity(const Multigraph& g, const std::vector<bool>& is_terminal,
                                 Node u, Node v) {
  if (u >= g.node_count() || v >= g.node_count() || is_terminal.size() != g.node_count()) {
    throw std::invalid_argument("element connectivity: node out of range");
  }
  if (u == v) throw std::invalid_argument("element connectivity: u and v must differ");
  if (!is_terminal[u] || !is_terminal[v]) {
    throw std::invalid_argument("element connectivity: endpoints must be terminals");
  }
  FlowNetwork net = split_network(g, is_terminal, 0);
  return net.max_flow(2 * u + 1, 2 * v, g.edge_count());
}

std::size_t element_flow(const Multigraph& g, const std::vector<bool>& is_terminal,
                         std::span<const Node> sources, std::span<const Node> sinks) {
  if (is_terminal.size() != g.node_count()) {
    throw std::invalid_argument("element flow: terminal flags size mismatch");
  }
  const std::size_t n = g.node_count();
  FlowNetwork net = split_network(g, is_terminal, 2);
  const std::size_t s = 2 * n;
  const std::size_t t = 2 * n + 1;
  for (Node a : sources) net.add_arc(s, 2 * a, FlowNetwork::kInf);
  for (Node b : sinks) net.add_arc(2 * b + 1, t, FlowNetwork::kInf);
  return net.max_flow(s, t, g.edge_count());
}

}  // namespace aug
