#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "aug/instance.hpp"

namespace aug {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi] by modulo reduction, so that streams are
/// identical across standard libraries.
std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi);

/// Cactus on n >= 2 nodes grown by attaching cycles of length 2 to 4 at
/// random existing nodes.
std::vector<std::vector<Node>> random_cactus_cycles(std::size_t n, Rng& rng);

/// Random labelled tree on n >= 1 nodes: node i attaches below a random j < i.
std::vector<Edge> random_tree(std::size_t n, Rng& rng);

struct FamilyGenOptions {
  std::size_t nodes = 6;
  std::size_t max_links = 8;
  std::size_t extra_links = 2;  // random links added after feasibility
  bool leaf_to_leaf = false;
};

/// Draws links until the instance is feasible, then up to `extra_links`
/// more; retries when the cap is exceeded. Throws std::invalid_argument when
/// no instance fits within the cap.
FamilyInstance random_family_instance(FamilyKind kind, const FamilyGenOptions& opt, Rng& rng);

struct ElemConnGenOptions {
  std::size_t terminals = 4;
  std::size_t steiner_nodes = 2;
  int r_max = 3;
  double edge_probability = 0.4;
};

ElemConnInstance random_elemconn(const ElemConnGenOptions& opt, Rng& rng);

/// p(A) = max r(u, v) over pairs split by A minus d_G(A), for a random
/// multigraph G and random symmetric r with entries in [0, r_max].
SetFunctionInstance random_setfunction(std::size_t n, int r_max, Rng& rng);

/// Minimal transversal plus a random 0/1 per element.
Transversal random_feasible_bounds(const SetFunction& p, Rng& rng);

/// Minimal transversal with one support coordinate lowered by one, which is
/// never a transversal. Empty when the minimal transversal is zero.
std::optional<Transversal> random_infeasible_bounds(const SetFunction& p, Rng& rng);

/// Kinds: crossing, cactus-l2l, blocktree, blocktree-l2l, laminar, elemconn,
/// setfunction. `n` is the node count (terminals for elemconn, ground size
/// for setfunction). The same (kind, n, seed) always yields the same instance.
Instance generate(std::string_view kind, std::size_t n, std::uint64_t seed);

const std::vector<std::string_view>& generator_kinds();

}  // namespace aug
