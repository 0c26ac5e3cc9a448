#include "aug/leaf2leaf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "aug/error.hpp"
#include "aug/incidence.hpp"

namespace aug {

std::vector<std::size_t> minimal_cover(const FamilyOracle& oracle, std::span<const Link> links) {
  if (!oracle.is_feasible(links)) throw InfeasibleError("link set does not cover the family");
  std::vector<bool> keep(links.size(), true);
  auto kept_links = [&] {
    std::vector<Link> out;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (keep[i]) out.push_back(links[i]);
    }
    return out;
  };
  for (std::size_t i = links.size(); i-- > 0;) {
    keep[i] = false;
    if (!oracle.is_feasible(kept_links())) keep[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

namespace {

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

}  // namespace

LeafToLeafReport solve_leaf_to_leaf(const FamilyOracle& oracle, std::span<const Link> links) {
  const std::vector<Node> leaves = oracle.leaves();
  const std::vector<ClassId> leaf_classes = oracle.classes_of(leaves);
  for (const Link& e : links) {
    if (oracle.is_void(e)) continue;
    if (!std::binary_search(leaf_classes.begin(), leaf_classes.end(), oracle.class_of(e.u)) ||
        !std::binary_search(leaf_classes.begin(), leaf_classes.end(), oracle.class_of(e.v))) {
      throw std::invalid_argument("leaf-to-leaf instance has a link not joining two leaves");
    }
  }
  if (!oracle.is_feasible(links)) throw InfeasibleError("link set does not cover the family");

  LeafToLeafReport report;
  report.ell = leaf_classes.size();

  std::vector<bool> taken(links.size(), false);
  std::vector<Link> chosen;
  auto take = [&](std::size_t i) {
    taken[i] = true;
    chosen.push_back(links[i]);
    report.solution.push_back(i);
  };

  std::unique_ptr<FamilyOracle> res;
  std::vector<std::size_t> active;
  while (true) {
    res = oracle.residual(chosen);
    report.terminal_trace.push_back(res->classes_of(leaves).size());
    active.clear();
    std::vector<Link> active_links;
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (!taken[i] && !res->is_void(links[i])) {
        active.push_back(i);
        active_links.push_back(links[i]);
      }
    }
    if (active.empty()) break;

    const IncidenceGraph h = build_incidence(*res, leaves, active_links);
    std::vector<std::vector<std::size_t>> terms(active.size());
    for (std::size_t x = 0; x < active.size(); ++x) terms[x] = h.terminal_neighbors(x);

    std::size_t best = active.size();
    for (std::size_t x = 0; x < active.size(); ++x) {
      if (terms[x].size() >= 3 && (best == active.size() || terms[x].size() > terms[best].size())) {
        best = x;
      }
    }
    if (best != active.size()) {
      take(active[best]);
      ++report.single_steps;
      report.k += 1;
      continue;
    }

    bool paired = false;
    for (std::size_t x = 0; x < active.size() && !paired; ++x) {
      for (std::size_t y = x + 1; y < active.size() && !paired; ++y) {
        if (h.adjacent(x, y) && disjoint(terms[x], terms[y])) {
          take(active[x]);
          take(active[y]);
          paired = true;
        }
      }
    }
    if (!paired) break;
    ++report.pair_steps;
    report.k += 2;
  }

  report.ell_prime = report.terminal_trace.back();
  std::vector<Link> residual_links;
  for (std::size_t i : active) residual_links.push_back(links[i]);
  for (std::size_t pos : minimal_cover(*res, residual_links)) take(active[pos]);
  report.phase2_size = report.solution.size() - report.k;

  const std::size_t size = report.solution.size();
  report.size_bound_ok = 3 * size + 3 <= 2 * report.ell + report.ell_prime;
  report.phase1_bound_ok = 3 * report.k <= 2 * (report.ell - report.ell_prime);
  report.phase2_bound_ok = report.phase2_size + 1 <= report.ell_prime;
  return report;
}

std::pair<std::size_t, std::size_t> leaf_lower_bounds(const LeafToLeafReport& report) {
  return {(report.ell + 1) / 2, report.ell_prime == 0 ? 0 : report.ell_prime - 1};
}

}  // namespace aug
