#include "aug/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace aug {

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  if (hi < lo) throw std::invalid_argument("empty draw range");
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::vector<std::vector<Node>> random_cactus_cycles(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("a cactus needs at least two nodes");
  std::vector<std::vector<Node>> cycles;
  std::size_t len = draw(rng, 2, std::min<std::size_t>(4, n));
  std::vector<Node> first(len);
  for (std::size_t i = 0; i < len; ++i) first[i] = i;
  cycles.push_back(std::move(first));
  std::size_t nodes = len;
  while (nodes < n) {
    len = draw(rng, 2, std::min<std::size_t>(4, n - nodes + 1));
    std::vector<Node> cycle{draw(rng, 0, nodes - 1)};
    for (std::size_t i = 0; i + 1 < len; ++i) cycle.push_back(nodes++);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<Edge> random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one node");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({draw(rng, 0, i - 1), i});
  return edges;
}

FamilyInstance random_family_instance(FamilyKind kind, const FamilyGenOptions& opt, Rng& rng) {
  FamilyInstance inst;
  inst.kind = kind;
  inst.nodes = opt.nodes;
  if (kind == FamilyKind::cactus) {
    inst.cycles = random_cactus_cycles(opt.nodes, rng);
  } else {
    if (opt.nodes < 3) throw std::invalid_argument("tree instances need at least three nodes");
    inst.tree_edges = random_tree(opt.nodes, rng);
  }
  const auto oracle = inst.oracle();

  std::vector<Node> ends;
  if (opt.leaf_to_leaf) {
    ends = oracle->leaves();
  } else {
    ends.resize(opt.nodes);
    for (std::size_t v = 0; v < opt.nodes; ++v) ends[v] = v;
  }
  std::set<std::pair<Node, Node>> banned;
  for (const Edge& e : inst.tree_edges) banned.insert(std::minmax(e.u, e.v));
  std::vector<Link> candidates;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const Link e{ends[i], ends[j]};
      if (!banned.contains(std::minmax(e.u, e.v)) && !oracle->is_void(e)) candidates.push_back(e);
    }
  }

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Link> pool = candidates;
    std::vector<Link> links;
    auto take_random = [&] {
      const std::size_t i = draw(rng, 0, pool.size() - 1);
      Link e = pool[i];
      if (draw(rng, 0, 1) == 1) std::swap(e.u, e.v);
      links.push_back(e);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    };
    while (!oracle->is_feasible(links) && !pool.empty() && links.size() <= opt.max_links) {
      take_random();
    }
    if (!oracle->is_feasible(links) || links.size() > opt.max_links) continue;
    const std::size_t extra = opt.extra_links == 0 ? 0 : draw(rng, 0, opt.extra_links);
    for (std::size_t i = 0; i < extra && !pool.empty() && links.size() < opt.max_links; ++i) {
      take_random();
    }
    // Shuffle so that the extra links are not always last.
    for (std::size_t i = links.size(); i > 1; --i) std::swap(links[i - 1], links[draw(rng, 0, i - 1)]);
    inst.links = std::move(links);
    return inst;
  }
  throw std::invalid_argument("could not draw a feasible instance within the link cap");
}

ElemConnInstance random_elemconn(const ElemConnGenOptions& opt, Rng& rng) {
  ElemConnInstance inst;
  const std::size_t n = opt.terminals + opt.steiner_nodes;
  inst.graph = Multigraph(n);
  const auto threshold = static_cast<std::size_t>(opt.edge_probability * 1000.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (draw(rng, 0, 999) < threshold) inst.graph.add_edge(u, v);
    }
  }
  for (std::size_t i = 0; i < opt.terminals; ++i) inst.terminals.push_back(i);
  inst.requirement.assign(opt.terminals, std::vector<int>(opt.terminals, 0));
  for (std::size_t i = 0; i < opt.terminals; ++i) {
    for (std::size_t j = i + 1; j < opt.terminals; ++j) {
      const int r = static_cast<int>(draw(rng, 0, static_cast<std::size_t>(opt.r_max)));
      inst.requirement[i][j] = inst.requirement[j][i] = r;
    }
  }
  return inst;
}

SetFunctionInstance random_setfunction(std::size_t n, int r_max, Rng& rng) {
  if (n > 16) throw std::invalid_argument("explicit set functions limited to 16 elements");
  SetFunctionInstance inst;
  for (std::size_t i = 0; i < n; ++i) inst.ground.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Edge> graph;
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t mult = draw(rng, 0, 3) == 0 ? 1 : 0;
      for (std::size_t k = 0; k < mult; ++k) graph.push_back({u, v});
      r[u][v] = r[v][u] = static_cast<int>(draw(rng, 0, static_cast<std::size_t>(r_max)));
    }
  }
  const std::size_t count = std::size_t{1} << n;
  inst.table.assign(count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    const Mask m = static_cast<Mask>(a);
    int demand = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!has(m, u)) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (!has(m, v)) demand = std::max(demand, r[u][v]);
      }
    }
    inst.table[a] = demand - static_cast<int>(cut_degree(graph, m));
  }
  return inst;
}

Transversal random_feasible_bounds(const SetFunction& p, Rng& rng) {
  Transversal g = minimal_transversal(p);
  for (int& x : g) x += static_cast<int>(draw(rng, 0, 1));
  return g;
}

std::optional<Transversal> random_infeasible_bounds(const SetFunction& p, Rng& rng) {
  Transversal g = minimal_transversal(p);
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g[v] > 0) support.push_back(v);
  }
  if (support.empty()) return std::nullopt;
  --g[support[draw(rng, 0, support.size() - 1)]];
  return g;
}

const std::vector<std::string_view>& generator_kinds() {
  static const std::vector<std::string_view> kinds{
      "crossing", "cactus-l2l", "blocktree", "blocktree-l2l", "laminar", "elemconn", "setfunction"};
  return kinds;
}

Instance generate(std::string_view kind, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  FamilyGenOptions fam;
  fam.nodes = n;
  if (kind == "crossing") return random_family_instance(FamilyKind::cactus, fam, rng);
  if (kind == "laminar") return random_family_instance(FamilyKind::laminar, fam, rng);
  if (kind == "blocktree") return random_family_instance(FamilyKind::blocktree, fam, rng);
  fam.leaf_to_leaf = true;
  if (kind == "cactus-l2l") return random_family_instance(FamilyKind::cactus, fam, rng);
  if (kind == "blocktree-l2l") return random_family_instance(FamilyKind::blocktree, fam, rng);
  if (kind == "elemconn") {
    if (n < 2) throw std::invalid_argument("elemconn needs at least two terminals");
    ElemConnGenOptions opt;
    opt.terminals = n;
    opt.steiner_nodes = draw(rng, 0, 4);
    return random_elemconn(opt, rng);
  }
  if (kind == "setfunction") {
    if (n < 1) throw std::invalid_argument("setfunction needs a nonempty ground set");
    return random_setfunction(n, 3, rng);
  }
  throw std::invalid_argument("unknown generator kind '" + std::string(kind) + "'");
}

}  // namespace aug
