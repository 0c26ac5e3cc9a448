#include "aug/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "aug/error.hpp"
#include "aug/exact.hpp"
#include "aug/incidence.hpp"
#include "aug/leaf2leaf.hpp"
#include "aug/relgreedy.hpp"

namespace aug {

using nlohmann::json;

namespace {

json edge_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::shared_ptr<const SetFunction> function_of(const Instance& inst) {
  if (const auto* e = std::get_if<ElemConnInstance>(&inst)) {
    return std::make_shared<ElemConnFunction>(*e);
  }
  return std::get<SetFunctionInstance>(inst).function();
}

std::optional<std::vector<int>> bounds_of(const Instance& inst) {
  if (const auto* e = std::get_if<ElemConnInstance>(&inst)) return e->bounds;
  return std::get<SetFunctionInstance>(inst).bounds;
}

bool all_leaf_links(const FamilyOracle& oracle, std::span<const Link> links) {
  const std::vector<ClassId> leaf_classes = oracle.classes_of(oracle.leaves());
  auto leaf = [&](Node v) {
    return std::binary_search(leaf_classes.begin(), leaf_classes.end(), oracle.class_of(v));
  };
  return std::all_of(links.begin(), links.end(), [&](const Link& e) {
    return oracle.is_void(e) || (leaf(e.u) && leaf(e.v));
  });
}

SolveOutcome solve_family(const FamilyInstance& inst, const SolveOptions& options,
                          const std::string& alg) {
  const auto oracle = inst.oracle();
  SolveOutcome out;
  out.alg = alg;
  if (alg == "leaf2leaf") {
    const LeafToLeafReport r = solve_leaf_to_leaf(*oracle, inst.links);
    for (std::size_t i : r.solution) out.edges.push_back(inst.links[i]);
    const auto [lb_half, lb_prime] = leaf_lower_bounds(r);
    out.report = {{"ell", r.ell},
                  {"ell_prime", r.ell_prime},
                  {"k", r.k},
                  {"phase2_size", r.phase2_size},
                  {"single_steps", r.single_steps},
                  {"pair_steps", r.pair_steps},
                  {"terminal_trace", r.terminal_trace},
                  {"lower_bounds", {lb_half, lb_prime}},
                  {"size_bound_ok", r.size_bound_ok},
                  {"phase1_bound_ok", r.phase1_bound_ok},
                  {"phase2_bound_ok", r.phase2_bound_ok}};
    out.certificates_ok = r.size_bound_ok && r.phase1_bound_ok && r.phase2_bound_ok;
  } else if (alg == "relgreedy") {
    const RelativeGreedyReport r =
        relative_greedy(*oracle, inst.links, options.k, options.exact_terminals);
    for (std::size_t i : r.solution) out.edges.push_back(inst.links[i]);
    json trace = json::array();
    bool ok = true;
    for (const GreedyIteration& it : r.trace) {
      trace.push_back({{"added", it.added},
                       {"nu_before", it.nu_before},
                       {"nu_after", it.nu_after},
                       {"density", it.density()},
                       {"estimated_density", it.estimated_density}});
      ok = ok && it.nu_after < it.nu_before && it.density() <= 1.0;
    }
    out.report = {{"terminals", r.selection.terminals},
                  {"selection_cover_cost", r.selection.cover_cost},
                  {"nu_initial", r.nu_initial},
                  {"greedy_size", r.greedy_size},
                  {"nu_final", r.nu_final},
                  {"completion_size", r.completion_size},
                  {"k", options.k},
                  {"exhaustive", r.exhaustive},
                  {"trace", trace}};
    out.certificates_ok = ok && r.completion_size <= r.nu_final;
  } else {
    throw std::invalid_argument("algorithm '" + alg + "' does not apply to family instances");
  }
  out.certificates_ok = out.certificates_ok && oracle->is_feasible(out.edges);
  return out;
}

SolveOutcome solve_sf(const Instance& inst, const SolveOptions& options) {
  const auto p = function_of(inst);
  SolveOutcome out;
  out.alg = "sfcover";
  GreedyCoverReport r;
  std::optional<std::vector<int>> bounds;
  if (options.degree_bounded) {
    bounds = bounds_of(inst);
    if (!bounds) throw std::invalid_argument("degree-bounded mode needs bounds in the instance");
    r = degree_bounded_cover(p, *bounds);
  } else {
    r = greedy_cover(p, minimal_transversal(*p), {FinishMode::tree, !options.literal});
  }
  out.edges = r.solution();
  const auto [lb_half, lb_two_thirds] = sf_lower_bounds(r);
  out.report = {{"t", r.t},
                {"k", r.k},
                {"split_edges", edge_json(r.split_edges)},
                {"final_edges", edge_json(r.final_edges)},
                {"final_terminals", r.final_terminals},
                {"final_p_max", r.final_p_max},
                {"final_g_max", r.final_g_max},
                {"stop_state_ok", r.stop_state_ok},
                {"size_bound_ok", r.size_bound_ok()},
                {"lower_bounds", {lb_half, lb_two_thirds}},
                {"degree", r.degree}};
  bool ok = covers(*p, out.edges) && r.size_bound_ok();
  if (!options.literal) ok = ok && r.stop_state_ok;
  if (bounds) {
    const int violation = max_degree_violation(r, *bounds);
    out.report["max_degree_violation"] = violation;
    ok = ok && violation <= 1;
  }
  out.certificates_ok = ok;
  return out;
}

}  // namespace

std::string default_algorithm(const Instance& inst) {
  if (const auto* f = std::get_if<FamilyInstance>(&inst)) {
    return all_leaf_links(*f->oracle(), f->links) ? "leaf2leaf" : "relgreedy";
  }
  return "sfcover";
}

SolveOutcome solve(const Instance& inst, const SolveOptions& options) {
  const std::string alg = options.alg.empty() ? default_algorithm(inst) : options.alg;
  if (const auto* f = std::get_if<FamilyInstance>(&inst)) return solve_family(*f, options, alg);
  if (alg != "sfcover") {
    throw std::invalid_argument("algorithm '" + alg + "' does not apply to set-function instances");
  }
  return solve_sf(inst, options);
}

Verdict verify(const Instance& inst, const std::vector<Edge>& edges) {
  Verdict v;
  if (const auto* f = std::get_if<FamilyInstance>(&inst)) {
    const auto oracle = f->oracle();
    for (const Edge& e : edges) {
      if (e.u >= f->nodes || e.v >= f->nodes || e.u == e.v) {
        throw std::invalid_argument("solution link out of range");
      }
    }
    v.method = f->kind == FamilyKind::cactus ? "3-edge-connectivity + incidence graph"
               : f->kind == FamilyKind::blocktree ? "2-connectivity + incidence graph"
                                                  : "2-edge-connectivity + incidence graph";
    v.feasible = oracle->direct_feasible(edges);
    const NormalizedLinks norm = normalize_links(*oracle, edges);
    const IncidenceGraph h = build_incidence(*oracle, oracle->leaves(), norm.links);
    std::vector<std::size_t> all(norm.links.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    v.cross_check = sscds_feasible(h, all);
    v.agree = v.feasible == v.cross_check && v.feasible == oracle->is_feasible(edges);
    return v;
  }
  const auto p = function_of(inst);
  for (const Edge& e : edges) {
    if (e.u >= p->ground_size() || e.v >= p->ground_size() || e.u == e.v) {
      throw std::invalid_argument("solution edge out of range");
    }
  }
  v.feasible = covers(*p, edges);
  if (const auto* e = std::get_if<ElemConnInstance>(&inst)) {
    v.method = "deficiency cover + pairwise element connectivity";
    const ElemConnInstance aug = e->with_edges(edges);
    const std::vector<bool> flags = aug.terminal_flags();
    v.cross_check = true;
    for (std::size_t i = 0; i < e->terminals.size() && v.cross_check; ++i) {
      for (std::size_t j = i + 1; j < e->terminals.size(); ++j) {
        const auto kappa = element_connectivity(aug.graph, flags, e->terminals[i], e->terminals[j]);
        if (static_cast<int>(kappa) < e->requirement[i][j]) {
          v.cross_check = false;
          break;
        }
      }
    }
  } else {
    v.method = "set-function cover";
    v.cross_check = v.feasible;
  }
  v.agree = v.feasible == v.cross_check;
  return v;
}

std::optional<std::size_t> optimum_size(const Instance& inst, std::size_t link_guard) {
  try {
    if (const auto* f = std::get_if<FamilyInstance>(&inst)) {
      return exact_min_cover(*f->oracle(), f->links, link_guard).size();
    }
    return exact_min_sfcover(function_of(inst)).size();
  } catch (const SizeGuardError&) {
    return std::nullopt;
  }
}

}  // namespace aug
