#include "aug/relgreedy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "aug/error.hpp"
#include "aug/leaf2leaf.hpp"

namespace aug {

namespace {

std::vector<Link> pick(std::span<const Link> links, std::span<const std::size_t> idx) {
  std::vector<Link> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(links[i]);
  return out;
}

}  // namespace

TerminalSelection select_terminals(const FamilyOracle& oracle, std::span<const Link> links,
                                   bool exact) {
  if (!oracle.is_feasible(links)) throw InfeasibleError("link set does not cover the family");
  const std::vector<Node> leaves = oracle.leaves();
  const std::vector<ClassId> leaf_classes = oracle.classes_of(leaves);
  auto on_leaf = [&](Node v) {
    return std::binary_search(leaf_classes.begin(), leaf_classes.end(), oracle.class_of(v));
  };
  std::vector<std::size_t> cost(links.size(), 0);
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < links.size(); ++i) {
    cost[i] = 2 - static_cast<std::size_t>(on_leaf(links[i].u)) -
              static_cast<std::size_t>(on_leaf(links[i].v));
    if (!oracle.is_void(links[i])) usable.push_back(i);
  }

  TerminalSelection sel;
  sel.leaf_count = leaf_classes.size();
  sel.exact = exact;
  if (exact) {
    const std::size_t m = usable.size();
    if (m > kExactTerminalGuard) throw SizeGuardError("exact terminal selection limited to 20 links");
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::size_t best_count = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::size_t c = 0;
      std::vector<std::size_t> subset;
      for (std::size_t b = 0; b < m; ++b) {
        if (mask >> b & 1U) {
          c += cost[usable[b]];
          subset.push_back(usable[b]);
        }
      }
      if (c > best_cost || (c == best_cost && subset.size() >= best_count)) continue;
      if (!oracle.is_feasible(pick(links, subset))) continue;
      best_cost = c;
      best_count = subset.size();
      best_mask = mask;
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (best_mask >> b & 1U) sel.cover.push_back(usable[b]);
    }
  } else {
    // Reverse-delete, most expensive links first.
    std::vector<std::size_t> order = usable;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cost[a] != cost[b] ? cost[a] > cost[b] : a > b;
    });
    std::vector<bool> keep(links.size(), false);
    for (std::size_t i : usable) keep[i] = true;
    for (std::size_t i : order) {
      keep[i] = false;
      std::vector<std::size_t> rest;
      for (std::size_t j : usable) {
        if (keep[j]) rest.push_back(j);
      }
      if (!oracle.is_feasible(pick(links, rest))) keep[i] = true;
    }
    for (std::size_t i : usable) {
      if (keep[i]) sel.cover.push_back(i);
    }
  }

  std::map<ClassId, Node> rep;
  auto add = [&](Node v) {
    const auto [it, inserted] = rep.emplace(oracle.class_of(v), v);
    if (!inserted) it->second = std::min(it->second, v);
  };
  for (Node v : leaves) add(v);
  for (std::size_t i : sel.cover) {
    add(links[i].u);
    add(links[i].v);
    sel.cover_cost += cost[i];
  }
  for (const auto& [_, v] : rep) sel.terminals.push_back(v);
  return sel;
}

std::size_t potential(const FamilyOracle& oracle, std::span<const Node> terminals,
                      std::span<const Link> chosen) {
  const std::size_t classes = oracle.residual(chosen)->classes_of(terminals).size();
  return classes == 0 ? 0 : classes - 1;
}

std::optional<DensityCandidate> best_density_subtree(const IncidenceGraph& h, std::size_t k) {
  if (k == 0) throw std::invalid_argument("density search needs k >= 1");
  const std::size_t m = h.link_count();
  const std::size_t n = h.node_count();
  if (h.terminal_count() < 2 || m == 0) return std::nullopt;

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  // 0-1 BFS from every link-node: entering a link-node costs 1, a terminal 0.
  std::vector<std::vector<std::size_t>> dist(m, std::vector<std::size_t>(n, kInf));
  std::vector<std::vector<std::size_t>> pred(m, std::vector<std::size_t>(n, kInf));
  for (std::size_t src = 0; src < m; ++src) {
    auto& d = dist[src];
    std::deque<std::size_t> dq{src};
    d[src] = 0;
    while (!dq.empty()) {
      const std::size_t x = dq.front();
      dq.pop_front();
      for (std::size_t y : h.neighbors(x)) {
        const std::size_t w = h.is_terminal(y) ? 0 : 1;
        if (d[x] + w < d[y]) {
          d[y] = d[x] + w;
          pred[src][y] = x;
          if (w == 0) dq.push_front(y); else dq.push_back(y);
        }
      }
    }
  }

  std::vector<std::size_t> sizes{1, 2};
  for (std::size_t s = k; s <= 3 * k; ++s) sizes.push_back(s);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::erase_if(sizes, [m](std::size_t s) { return s > m; });

  double work = 0;
  for (std::size_t s : sizes) {
    double c = 1;
    for (std::size_t i = 0; i < s; ++i) c = c * static_cast<double>(m - i) / static_cast<double>(i + 1);
    work += c;
  }
  if (work > 2e6) throw SizeGuardError("density search would enumerate too many seed sets");

  std::optional<DensityCandidate> best;
  std::vector<bool> in_tree(n, false);
  for (std::size_t size : sizes) {
    std::vector<std::size_t> seed(size);
    std::iota(seed.begin(), seed.end(), 0);
    while (true) {
      // Prim over the seed set in the metric completion.
      std::vector<std::size_t> parent(size, kInf);
      std::vector<std::size_t> key(size, kInf);
      std::vector<bool> done(size, false);
      key[0] = 0;
      bool connected = true;
      std::vector<std::pair<std::size_t, std::size_t>> mst;
      for (std::size_t it = 0; it < size; ++it) {
        std::size_t u = size;
        for (std::size_t i = 0; i < size; ++i) {
          if (!done[i] && (u == size || key[i] < key[u])) u = i;
        }
        if (key[u] == kInf) {
          connected = false;
          break;
        }
        done[u] = true;
        if (parent[u] != kInf) mst.emplace_back(seed[parent[u]], seed[u]);
        for (std::size_t i = 0; i < size; ++i) {
          if (!done[i] && dist[seed[u]][seed[i]] < key[i]) {
            key[i] = dist[seed[u]][seed[i]];
            parent[i] = u;
          }
        }
      }

      if (connected) {
        std::fill(in_tree.begin(), in_tree.end(), false);
        for (std::size_t x : seed) in_tree[x] = true;
        for (const auto& [a, b] : mst) {
          for (std::size_t y = b; y != a; y = pred[a][y]) in_tree[y] = true;
        }
        DensityCandidate cand;
        cand.seed = seed;
        std::vector<bool> term(n, false);
        for (std::size_t x = 0; x < m; ++x) {
          if (!in_tree[x]) continue;
          cand.nodes.push_back(x);
          for (std::size_t y : h.neighbors(x)) {
            if (h.is_terminal(y)) term[y] = true;
          }
        }
        cand.s = cand.nodes.size();
        cand.r = static_cast<std::size_t>(std::count(term.begin(), term.end(), true));
        if (cand.r >= 2) {
          const bool better =
              !best || cand.s * (best->r - 1) < best->s * (cand.r - 1) ||
              (cand.s * (best->r - 1) == best->s * (cand.r - 1) && cand.seed < best->seed);
          if (better) best = std::move(cand);
        }
      }

      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && seed[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++seed[i - 1];
      for (std::size_t j = i; j < size; ++j) seed[j] = seed[j - 1] + 1;
    }
  }
  return best;
}

RelativeGreedyReport relative_greedy(const FamilyOracle& oracle, std::span<const Link> links,
                                     std::size_t k, bool exact_terminals) {
  RelativeGreedyReport report;
  report.selection = select_terminals(oracle, links, exact_terminals);
  const std::vector<Node>& terminals = report.selection.terminals;
  report.nu_initial = terminals.empty() ? 0 : oracle.classes_of(terminals).size() - 1;

  std::vector<bool> taken(links.size(), false);
  std::vector<Link> chosen;
  std::size_t nu = report.nu_initial;
  while (nu > 0) {
    const auto res = oracle.residual(chosen);
    std::vector<std::size_t> active;
    std::vector<Link> active_links;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (!taken[i] && !res->is_void(links[i])) {
        active.push_back(i);
        active_links.push_back(links[i]);
      }
    }
    if (active.empty()) break;
    bool all_sizes = true;
    for (std::size_t s = 3; s <= active.size(); ++s) {
      if (s < k || s > 3 * k) all_sizes = false;
    }
    if (!all_sizes) report.exhaustive = false;

    const IncidenceGraph h = build_incidence(*res, terminals, active_links);
    const auto cand = best_density_subtree(h, k);
    if (!cand) break;

    GreedyIteration step;
    for (std::size_t x : cand->nodes) step.added.push_back(active[x]);
    step.nu_before = nu;
    step.nu_after = potential(*res, terminals, pick(links, step.added));
    step.estimated_density = cand->density();
    // Density condition with the unit cap: |B| <= nu drop.
    if (step.nu_after >= nu || step.added.size() > nu - step.nu_after) break;

    for (std::size_t i : step.added) {
      taken[i] = true;
      chosen.push_back(links[i]);
      report.solution.push_back(i);
    }
    nu = step.nu_after;
    report.trace.push_back(std::move(step));
  }
  report.greedy_size = report.solution.size();
  report.nu_final = nu;

  // Completion: inclusion-minimal residual cover drawn from the selection
  // cover, whose ends are all terminals.
  const auto res = oracle.residual(chosen);
  std::vector<std::size_t> pool;
  for (std::size_t i : report.selection.cover) {
    if (!taken[i] && !res->is_void(links[i])) pool.push_back(i);
  }
  for (std::size_t pos : minimal_cover(*res, pick(links, pool))) {
    report.solution.push_back(pool[pos]);
  }
  report.completion_size = report.solution.size() - report.greedy_size;
  return report;
}

CombinedRatio combined_ratio(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw std::invalid_argument("alpha must lie in (1, 2)");
  auto gap = [alpha](double x) { return 1.0 + std::log(4.0 - x) - alpha - (alpha - 1.0) * x; };
  CombinedRatio out;
  if (gap(2.0) >= 0.0) {
    out.x = 2.0;
  } else {
    double lo = 0.0, hi = 2.0;  // gap(lo) > 0 > gap(hi); gap is decreasing
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    out.x = 0.5 * (lo + hi);
  }
  out.ratio = 1.0 + std::log(4.0 - out.x);
  return out;
}

}  // namespace aug
