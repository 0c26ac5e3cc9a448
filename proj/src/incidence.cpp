#include "aug/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "aug/error.hpp"

namespace aug {

IncidenceGraph::IncidenceGraph(std::size_t link_nodes, std::size_t terminal_nodes)
    : link_count_(link_nodes), adjacency_(link_nodes + terminal_nodes) {}

void IncidenceGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= node_count() || b >= node_count() || a == b) {
    throw std::invalid_argument("incidence edge out of range");
  }
  if (is_terminal(a) && is_terminal(b)) {
    throw std::invalid_argument("terminals must form an independent set");
  }
  auto insert = [](std::vector<std::size_t>& adj, std::size_t y) {
    const auto it = std::lower_bound(adj.begin(), adj.end(), y);
    if (it == adj.end() || *it != y) adj.insert(it, y);
  };
  insert(adjacency_[a], b);
  insert(adjacency_[b], a);
}

bool IncidenceGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<std::size_t> IncidenceGraph::terminal_neighbors(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y : adjacency_[x]) {
    if (is_terminal(y)) out.push_back(y);
  }
  return out;
}

NormalizedLinks normalize_links(const FamilyOracle& oracle, std::span<const Link> links) {
  NormalizedLinks out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!oracle.is_void(links[i])) {
      out.links.push_back(links[i]);
      out.original_index.push_back(i);
    }
  }
  return out;
}

IncidenceGraph build_incidence(const FamilyOracle& oracle, std::span<const Node> terminals,
                               std::span<const Link> links) {
  std::map<ClassId, Node> rep_of_class;
  for (Node r : terminals) rep_of_class.emplace(oracle.class_of(r), r);
  for (Node leaf : oracle.leaves()) {
    if (!rep_of_class.contains(oracle.class_of(leaf))) {
      throw StructureError("terminal set must contain every leaf");
    }
  }

  IncidenceGraph h(links.size(), rep_of_class.size());
  std::map<ClassId, std::size_t> terminal_of_class;
  for (const auto& [cls, rep] : rep_of_class) {
    terminal_of_class.emplace(cls, h.terminal_node(h.terminal_rep.size()));
    h.terminal_rep.push_back(rep);
  }

  for (std::size_t i = 0; i < links.size(); ++i) {
    if (oracle.is_void(links[i])) throw StructureError("link is void");
    h.link_index.push_back(i);
    for (ClassId c : oracle.link_classes(links[i])) {
      const auto it = terminal_of_class.find(c);
      if (it != terminal_of_class.end()) h.add_edge(i, it->second);
    }
  }
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (std::size_t j = i + 1; j < links.size(); ++j) {
      if (oracle.inseparable(links[i], links[j])) h.add_edge(i, j);
    }
  }
  return h;
}

namespace {

bool induced_connected(const IncidenceGraph& h, const std::vector<bool>& keep) {
  std::size_t total = 0;
  std::size_t start = h.node_count();
  for (std::size_t x = 0; x < h.node_count(); ++x) {
    if (keep[x]) {
      ++total;
      if (start == h.node_count()) start = x;
    }
  }
  if (total <= 1) return true;
  std::vector<bool> seen(h.node_count(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : h.neighbors(x)) {
      if (keep[y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == total;
}

void require_link_nodes(const IncidenceGraph& h, std::span<const std::size_t> chosen) {
  for (std::size_t x : chosen) {
    if (x >= h.link_count()) throw std::invalid_argument("expected link-node ids");
  }
}

}  // namespace

bool sscds_feasible(const IncidenceGraph& h, std::span<const std::size_t> chosen) {
  require_link_nodes(h, chosen);
  std::vector<bool> keep(h.node_count(), false);
  for (std::size_t x : chosen) keep[x] = true;
  for (std::size_t i = 0; i < h.terminal_count(); ++i) keep[h.terminal_node(i)] = true;
  return induced_connected(h, keep);
}

bool check_property_star(const IncidenceGraph& h) {
  for (std::size_t i = 0; i < h.terminal_count(); ++i) {
    const auto& nb = h.neighbors(h.terminal_node(i));
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (!h.adjacent(nb[a], nb[b])) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> steiner_to_sscds(const IncidenceGraph& h,
                                          std::span<const IncidenceEdge> tree) {
  if (!check_property_star(h)) throw StructureError("terminal neighbourhood is not a clique");

  std::map<std::size_t, std::set<std::size_t>> adj;
  for (std::size_t i = 0; i < h.terminal_count(); ++i) adj[h.terminal_node(i)];
  for (const IncidenceEdge& e : tree) {
    if (e.a >= h.node_count() || e.b >= h.node_count() || !h.adjacent(e.a, e.b)) {
      throw std::invalid_argument("tree edge is not an edge of the incidence graph");
    }
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  // A tree spanning R: connected, |nodes| = |edges| + 1.
  auto connected = [&adj] {
    std::set<std::size_t> seen{adj.begin()->first};
    std::vector<std::size_t> stack{adj.begin()->first};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x]) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    return seen.size() == adj.size();
  };
  if (adj.empty() || adj.size() != tree.size() + 1 || !connected()) {
    throw std::invalid_argument("edges do not form a tree spanning the terminals");
  }

  // Re-hang every non-leaf terminal: keep one edge r-x, move r-y to x-y.
  for (std::size_t i = 0; i < h.terminal_count(); ++i) {
    const std::size_t r = h.terminal_node(i);
    auto& nb = adj[r];
    if (nb.size() < 2) continue;
    const std::size_t x = *nb.begin();
    const std::vector<std::size_t> others(std::next(nb.begin()), nb.end());
    for (std::size_t y : others) {
      nb.erase(y);
      adj[y].erase(r);
      adj[x].insert(y);
      adj[y].insert(x);
    }
  }

  std::vector<std::size_t> out;
  for (const auto& [x, _] : adj) {
    if (!h.is_terminal(x)) out.push_back(x);
  }
  return out;
}

std::vector<IncidenceEdge> sscds_to_steiner(const IncidenceGraph& h,
                                            std::span<const std::size_t> chosen) {
  require_link_nodes(h, chosen);
  std::vector<bool> keep(h.node_count(), false);
  for (std::size_t x : chosen) keep[x] = true;
  if (chosen.empty() || !induced_connected(h, keep)) {
    throw std::invalid_argument("set is not connected");
  }

  std::vector<IncidenceEdge> out;
  std::vector<bool> seen(h.node_count(), false);
  const std::size_t root = *std::min_element(chosen.begin(), chosen.end());
  std::vector<std::size_t> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t y : h.neighbors(x)) {
      if (keep[y] && !seen[y]) {
        seen[y] = true;
        out.push_back({x, y});
        queue.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < h.terminal_count(); ++i) {
    const std::size_t r = h.terminal_node(i);
    const auto& nb = h.neighbors(r);
    const auto it = std::find_if(nb.begin(), nb.end(), [&](std::size_t y) { return keep[y]; });
    if (it == nb.end()) throw std::invalid_argument("set does not dominate every terminal");
    out.push_back({*it, r});
  }
  return out;
}

}  // namespace aug
