#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's connectivity, flow or family code: every answer comes from
// enumerating subsets of nodes or elements directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "aug/graph.hpp"

namespace oracle {

using aug::Edge;
using Mask64 = std::uint64_t;

inline bool in(Mask64 m, std::size_t v) { return (m >> v & 1U) != 0; }

inline std::size_t crossing(const std::vector<Edge>& edges, Mask64 side) {
  std::size_t c = 0;
  for (const Edge& e : edges) c += in(side, e.u) != in(side, e.v) ? 1 : 0;
  return c;
}

/// Every graph edge of a cactus given by its cycles; a 2-cycle gives a
/// parallel pair.
inline std::vector<Edge> cactus_edges(const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Edge> out;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back({c[i], c[(i + 1) % c.size()]});
  }
  return out;
}

inline std::vector<Edge> join(std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// min over nonempty proper node subsets of the crossing count.
inline std::size_t min_cut(std::size_t n, const std::vector<Edge>& edges) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // Fix node n-1 outside to enumerate each bipartition once.
  for (Mask64 a = 1; a < (Mask64{1} << (n - 1)); ++a) best = std::min(best, crossing(edges, a));
  return best;
}

inline bool connected_without(std::size_t n, const std::vector<Edge>& edges, Mask64 removed) {
  std::vector<std::size_t> comp(n);
  for (std::size_t v = 0; v < n; ++v) comp[v] = v;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (const Edge& e : edges) {
    if (in(removed, e.u) || in(removed, e.v)) continue;
    comp[find(e.u)] = find(e.v);
  }
  std::size_t root = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (in(removed, v)) continue;
    if (root == n) root = find(v);
    if (find(v) != root) return false;
  }
  return true;
}

inline bool two_node_connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n < 3 || !connected_without(n, edges, 0)) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!connected_without(n, edges, Mask64{1} << v)) return false;
  }
  return true;
}

inline bool is_cutnode(std::size_t n, const std::vector<Edge>& edges, std::size_t v) {
  return !connected_without(n, edges, Mask64{1} << v);
}

/// Members of the cactus family: node sets whose edge cut in the cactus is
/// exactly 2 (the minimum cuts of a cactus).
inline std::vector<Mask64> cactus_members(std::size_t n, const std::vector<Edge>& cactus) {
  std::vector<Mask64> out;
  for (Mask64 a = 1; a + 1 < (Mask64{1} << n); ++a) {
    if (crossing(cactus, a) == 2) out.push_back(a);
  }
  return out;
}

/// A link covers A when exactly one end lies in A.
inline bool covers_all(const std::vector<Mask64>& members, const std::vector<Edge>& links) {
  for (Mask64 a : members) {
    if (crossing(links, a) == 0) return false;
  }
  return true;
}

/// Smallest subset of `links` satisfying `feasible`, by size.
inline std::size_t min_subset(const std::vector<Edge>& links,
                              const std::function<bool(const std::vector<Edge>&)>& feasible) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t mask = 0; mask < (1U << links.size()); ++mask) {
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (mask >> i & 1U) sub.push_back(links[i]);
    }
    if (sub.size() < best && feasible(sub)) best = sub.size();
  }
  return best;
}

/// Minimum number of elements (edges and non-terminal nodes) whose removal
/// separates every node of `src` from every node of `dst`: each remaining
/// node is put on the source side, the sink side, or (non-terminals only)
/// removed, and the edges between the two sides must be removed too.
inline std::size_t min_element_cut(std::size_t n, const std::vector<Edge>& edges,
                                   const std::vector<bool>& terminal, Mask64 src, Mask64 dst) {
  std::vector<std::size_t> free_nodes;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in(src, v) && !in(dst, v)) free_nodes.push_back(v);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> side(n, 0);  // 0 source, 1 sink, 2 removed
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t removed) {
    if (removed >= best) return;
    if (i == free_nodes.size()) {
      std::size_t cut = removed;
      for (const Edge& e : edges) {
        if (side[e.u] != 2 && side[e.v] != 2 && side[e.u] != side[e.v]) ++cut;
      }
      best = std::min(best, cut);
      return;
    }
    const std::size_t v = free_nodes[i];
    for (int s = 0; s < (terminal[v] ? 2 : 3); ++s) {
      side[v] = s;
      rec(i + 1, removed + (s == 2 ? 1 : 0));
    }
  };
  for (std::size_t v = 0; v < n; ++v) side[v] = in(dst, v) ? 1 : 0;
  rec(0, 0);
  return best;
}

/// Maximum of sum f(A) over subpartitions of {0..n-1}, by recursion over
/// the block containing the smallest unplaced element (which may also be
/// left out).
inline int max_subpartition(std::size_t n, const std::function<int(std::uint32_t)>& f) {
  std::function<int(std::uint32_t)> rec = [&](std::uint32_t left) -> int {
    if (left == 0) return 0;
    std::size_t low = 0;
    while (!(left >> low & 1U)) ++low;
    const std::uint32_t rest = left & ~(1U << low);
    int best = rec(rest);
    std::vector<std::size_t> elems;
    for (std::size_t v = 0; v < n; ++v) {
      if (rest >> v & 1U) elems.push_back(v);
    }
    for (std::uint32_t pick = 0; pick < (1U << elems.size()); ++pick) {
      std::uint32_t block = 1U << low;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (pick >> i & 1U) block |= 1U << elems[i];
      }
      best = std::max(best, f(block) + rec(left & ~block));
    }
    return best;
  };
  return rec(n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

/// Smallest multiset of pairs of {0..n-1} with crossing(J, A) >= f(A) for
/// all A, by increasing size; returns SIZE_MAX above `limit`.
inline std::size_t min_multiset_cover(std::size_t n, const std::function<int(std::uint32_t)>& f,
                                      std::size_t limit) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const std::uint32_t count = 1U << n;
  auto ok = [&](const std::vector<Edge>& j) {
    for (std::uint32_t a = 0; a < count; ++a) {
      if (static_cast<int>(crossing(j, a)) < f(a)) return false;
    }
    return true;
  };
  std::vector<Edge> cur;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    if (left == 0) return ok(cur);
    for (std::size_t i = from; i < pairs.size(); ++i) {
      cur.push_back(pairs[i]);
      if (rec(i, left - 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= limit; ++size) {
    cur.clear();
    if (rec(0, size)) return size;
  }
  return std::numeric_limits<std::size_t>::max();
}

}  // namespace oracle
