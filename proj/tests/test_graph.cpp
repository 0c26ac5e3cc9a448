#include <doctest.h>

#include <stdexcept>

#include "aug/error.hpp"
#include "aug/generate.hpp"
#include "aug/graph.hpp"
#include "oracles.hpp"

using namespace aug;

namespace {

Multigraph make(std::size_t n, const std::vector<Edge>& edges) {
  Multigraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::vector<Edge> random_edges(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> out;
  while (out.size() < m) {
    const std::size_t u = draw(rng, 0, n - 1), v = draw(rng, 0, n - 1);
    if (u != v) out.push_back({u, v});
  }
  return out;
}

}  // namespace

TEST_CASE("multigraph rejects self-loops and bad endpoints") {
  Multigraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK(g.add_edge(0, 1) == 0);
  CHECK(g.add_edge(1, 0) == 1);
  CHECK(g.degree(0) == 2);
  CHECK(g.opposite(1, 1) == 0);
}

TEST_CASE("block-cut tree of small graphs") {
  SUBCASE("path a-b-c") {
    const BlockCutTree t = block_cut_tree(make(3, {{0, 1}, {1, 2}}));
    CHECK(t.cutnodes == std::vector<Node>{1});
    CHECK(t.blocks == std::vector<std::vector<Node>>{{0, 1}, {1, 2}});
    CHECK(t.tree_size() == 3);
    CHECK(t.psi[1] == 2);
    CHECK(t.psi[0] == 0);
    CHECK(t.psi[2] == 1);
  }
  SUBCASE("triangle") {
    const BlockCutTree t = block_cut_tree(make(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(t.cutnodes.empty());
    CHECK(t.blocks == std::vector<std::vector<Node>>{{0, 1, 2}});
  }
  SUBCASE("star with center 3") {
    const BlockCutTree t = block_cut_tree(make(4, {{0, 3}, {1, 3}, {2, 3}}));
    CHECK(t.cutnodes == std::vector<Node>{3});
    CHECK(t.blocks == std::vector<std::vector<Node>>{{0, 3}, {1, 3}, {2, 3}});
    CHECK(t.adjacency[3].size() == 3);
  }
  SUBCASE("disconnected input") {
    CHECK_THROWS_WITH_AS(block_cut_tree(make(3, {{0, 1}})), "graph not connected", StructureError);
  }
}

TEST_CASE("is_2_connected examples") {
  CHECK(is_2_connected(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK_FALSE(is_2_connected(make(3, {{0, 1}, {1, 2}})));
  // K4 with node 3's edges removed leaves 3 isolated.
  CHECK_FALSE(is_2_connected(make(4, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST_CASE("edge connectivity examples") {
  CHECK(edge_connectivity(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == 2);
  CHECK(edge_connectivity(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
  std::vector<Edge> c6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}};
  CHECK(edge_connectivity(make(6, c6)) == 3);
  CHECK(oracle::min_cut(6, c6) == 3);
  CHECK_THROWS(edge_connectivity(Multigraph(1)));
}

TEST_CASE("element connectivity examples") {
  CHECK(element_connectivity(make(2, {{0, 1}}), {true, true}, 0, 1) == 1);
  // Terminals 0, 1, 2 and hub 3.
  const std::vector<bool> term{true, true, true, false};
  Multigraph hub = make(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(element_connectivity(hub, term, 0, 1) == 1);
  hub.add_edge(0, 1);
  CHECK(element_connectivity(hub, term, 0, 1) == 2);
  CHECK_THROWS_AS(element_connectivity(hub, term, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(element_connectivity(hub, term, 0, 3), std::invalid_argument);
}

TEST_CASE("block-cut tree cutnodes agree with node deletion") {
  Rng rng(11);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = draw(rng, 2, 12);
    std::vector<Edge> edges = random_edges(n, draw(rng, n - 1, 2 * n), rng);
    if (!oracle::connected_without(n, edges, 0)) continue;
    const BlockCutTree t = block_cut_tree(make(n, edges));
    for (std::size_t v = 0; v < n; ++v) {
      CHECK(t.is_cutnode(v) == oracle::is_cutnode(n, edges, v));
    }
    // Tree: connected and acyclic.
    std::size_t tree_edges = 0;
    for (const auto& adj : t.adjacency) tree_edges += adj.size();
    CHECK(tree_edges / 2 + 1 == t.tree_size());
    // Each tree edge joins a block and a cutnode it contains.
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
      for (std::size_t c : t.adjacency[b]) {
        REQUIRE_FALSE(t.is_block(c));
        const Node cut = t.cutnodes[c - t.blocks.size()];
        CHECK(std::binary_search(t.blocks[b].begin(), t.blocks[b].end(), cut));
      }
    }
    CHECK(is_2_connected(make(n, edges)) == oracle::two_node_connected(n, edges));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("edge connectivity matches bipartition enumeration") {
  Rng rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = draw(rng, 2, 10);
    const std::vector<Edge> edges = random_edges(n, draw(rng, 1, 3 * n), rng);
    CHECK(edge_connectivity(make(n, edges)) == oracle::min_cut(n, edges));
  }
}

TEST_CASE("element connectivity matches element-cut enumeration") {
  Rng rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = draw(rng, 2, 7);
    const std::vector<Edge> edges = random_edges(n, draw(rng, 1, 6), rng);
    std::vector<bool> term(n, false);
    term[0] = term[1] = true;
    for (std::size_t v = 2; v < n; ++v) term[v] = draw(rng, 0, 2) == 0;
    const std::size_t expect = oracle::min_element_cut(n, edges, term, 1, 2);
    CHECK(element_connectivity(make(n, edges), term, 0, 1) == expect);
  }
}
