#include <doctest.h>

#include <numeric>

#include "aug/error.hpp"
#include "aug/generate.hpp"
#include "aug/leaf2leaf.hpp"
#include "fixtures.hpp"

using namespace aug;

TEST_CASE("C4 with both diagonals takes one pair") {
  const CactusOracle o(Cactus::from_cycles(4, {{0, 1, 2, 3}}));
  const std::vector<Link> links{{0, 2}, {1, 3}};
  const LeafToLeafReport rep = solve_leaf_to_leaf(o, links);
  CHECK(rep.solution == std::vector<std::size_t>{0, 1});
  CHECK(rep.pair_steps == 1);
  CHECK(rep.single_steps == 0);
  CHECK(rep.ell == 4);
  CHECK(rep.ell_prime == 1);
  CHECK(rep.terminal_trace == std::vector<std::size_t>{4, 1});
  CHECK(leaf_lower_bounds(rep) == std::pair<std::size_t, std::size_t>{2, 0});
  CHECK(rep.size_bound_ok);
  CHECK(o.is_feasible(links));
}

TEST_CASE("C6 with three diagonals: a pair, then one single-link step") {
  const CactusOracle o(Cactus::from_cycles(6, {{0, 1, 2, 3, 4, 5}}));
  const std::vector<Link> links{{0, 3}, {1, 4}, {2, 5}};
  const LeafToLeafReport rep = solve_leaf_to_leaf(o, links);
  CHECK(rep.solution == std::vector<std::size_t>{0, 1, 2});
  CHECK(rep.pair_steps == 1);
  CHECK(rep.single_steps == 1);
  CHECK(rep.k == 3);
  CHECK(rep.phase2_size == 0);
  CHECK(rep.terminal_trace == std::vector<std::size_t>{6, 3, 1});
  CHECK(leaf_lower_bounds(rep) == std::pair<std::size_t, std::size_t>{3, 0});
  CHECK(rep.size_bound_ok);
  CHECK(rep.phase1_bound_ok);
  CHECK(rep.phase2_bound_ok);
}

TEST_CASE("block-tree star falls through to phase 2") {
  // Star centred at 3 with leaves 0, 1, 2.
  const BlockTreeOracle o(4, {{0, 3}, {1, 3}, {2, 3}});
  const std::vector<Link> links{{0, 1}, {0, 2}, {1, 2}};
  const LeafToLeafReport rep = solve_leaf_to_leaf(o, links);
  CHECK(rep.k == 0);
  CHECK(rep.phase2_size == 2);
  CHECK(rep.solution == std::vector<std::size_t>{0, 1});
  CHECK(rep.ell_prime == 3);
  CHECK(leaf_lower_bounds(rep) == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(minimal_cover(o, links) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("minimal_cover edge cases") {
  const BlockTreeOracle o(4, {{0, 3}, {1, 3}, {2, 3}});
  const std::vector<Link> minimal{{0, 1}, {1, 2}};
  CHECK(minimal_cover(o, minimal) == std::vector<std::size_t>{0, 1});
  const CactusOracle two(Cactus::from_cycles(2, {{0, 1}}));
  const std::vector<Link> single{{0, 1}};
  CHECK(minimal_cover(two, single) == std::vector<std::size_t>{0});
  const std::vector<Link> short_of_cover{{0, 1}};
  CHECK_THROWS_AS(minimal_cover(o, short_of_cover), InfeasibleError);
}

TEST_CASE("two leaves give lower bound 1") {
  const CactusOracle two(Cactus::from_cycles(2, {{0, 1}}));
  const std::vector<Link> single{{0, 1}};
  const LeafToLeafReport rep = solve_leaf_to_leaf(two, single);
  CHECK(rep.solution.size() == 1);
  CHECK(leaf_lower_bounds(rep).first == 1);
}

TEST_CASE("leaf-to-leaf input errors") {
  const CactusOracle o(Cactus::from_cycles(5, {{0, 1, 4}, {2, 3, 4}}));
  const std::vector<Link> non_leaf{{0, 4}, {1, 2}, {0, 3}};
  CHECK_THROWS_AS(solve_leaf_to_leaf(o, non_leaf), std::invalid_argument);
  const std::vector<Link> short_of_cover{{0, 2}};
  CHECK_THROWS_AS(solve_leaf_to_leaf(o, short_of_cover), InfeasibleError);
}

TEST_CASE("leaf-to-leaf certificates and ratio on random instances") {
  Rng rng(41);
  std::size_t max_num = 0, max_den = 1;
  for (int iter = 0; iter < 240; ++iter) {
    FamilyGenOptions opt;
    opt.nodes = draw(rng, 3, 8);
    opt.max_links = 8;
    opt.extra_links = draw(rng, 0, 3);
    opt.leaf_to_leaf = true;
    const FamilyInstance inst =
        random_family_instance(iter % 2 == 0 ? FamilyKind::cactus : FamilyKind::blocktree, opt, rng);
    const auto o = inst.oracle();
    const LeafToLeafReport rep = solve_leaf_to_leaf(*o, inst.links);
    const std::vector<Link> j = fixture::pick(inst.links, rep.solution);
    const std::size_t opt_size = fixture::brute_opt(inst);

    CHECK(fixture::brute_feasible(inst, j));
    CHECK(3 * j.size() <= 5 * opt_size);
    CHECK(3 * j.size() + 3 <= 2 * rep.ell + rep.ell_prime);
    CHECK(rep.size_bound_ok);
    CHECK(rep.phase1_bound_ok);
    CHECK(rep.phase2_bound_ok);
    CHECK(rep.solution.size() == rep.k + rep.phase2_size);
    CHECK(rep.k == rep.single_steps + 2 * rep.pair_steps);
    const auto [half, prime] = leaf_lower_bounds(rep);
    CHECK(half <= opt_size);
    CHECK(prime <= opt_size);

    // Every phase-1 iteration removes at least two terminals.
    for (std::size_t i = 0; i + 1 < rep.terminal_trace.size(); ++i) {
      CHECK(rep.terminal_trace[i] >= rep.terminal_trace[i + 1] + 2);
    }

    // Phase-2 links form a forest on the classes at the phase switch.
    const std::vector<std::size_t> phase1(rep.solution.begin(),
                                          rep.solution.begin() + static_cast<std::ptrdiff_t>(rep.k));
    const auto res = o->residual(fixture::pick(inst.links, phase1));
    std::vector<std::size_t> parent(res->class_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = rep.k; i < rep.solution.size(); ++i) {
      const Link e = inst.links[rep.solution[i]];
      const std::size_t a = find(res->class_of(e.u)), b = find(res->class_of(e.v));
      CHECK(a != b);
      parent[a] = b;
    }
    if (j.size() * max_den > max_num * opt_size) {
      max_num = j.size();
      max_den = opt_size;
    }
  }
  MESSAGE("worst leaf-to-leaf ratio " << max_num << "/" << max_den);
}
