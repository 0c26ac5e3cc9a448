// Acceptance runner: one PASS/FAIL line per headline criterion, exit status 1
// when any criterion fails. All tolerances and suite sizes are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>

#include "aug/error.hpp"
#include "aug/exact.hpp"
#include "aug/generate.hpp"
#include "aug/incidence.hpp"
#include "aug/leaf2leaf.hpp"
#include "aug/relgreedy.hpp"
#include "aug/sfcover.hpp"
#include "fixtures.hpp"

using namespace aug;

namespace {

constexpr std::size_t kReductionInstances = 1000;
constexpr double kReductionSeconds = 60.0;
constexpr std::size_t kLeafInstances = 500;
constexpr std::size_t kGreedyInstances = 500;
constexpr std::size_t kConversionInstances = 200;
constexpr std::size_t kSetFunctionInstances = 500;
constexpr std::size_t kElemConnInstances = 200;
constexpr std::size_t kMaxLinks = 8;
constexpr double kRatioTolerance = 1e-3;
constexpr double kBoundSlack = 1e-9;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) first_failures_ << " [" << what << "]";
  }
  std::ostringstream& note() { return note_; }

  bool report() const {
    const bool ok = failures_ == 0 && checks_ > 0;
    std::printf("%s %s: %zu checks, %zu failures%s%s\n", ok ? "PASS" : "FAIL", name_.c_str(), checks_,
                failures_, note_.str().empty() ? "" : (", " + note_.str()).c_str(),
                first_failures_.str().c_str());
    return ok;
  }

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream first_failures_;
  std::ostringstream note_;
};

std::string tag(const char* what, std::size_t iter) { return std::string(what) + " #" + std::to_string(iter); }

FamilyInstance random_instance(FamilyKind kind, bool leaf_to_leaf, Rng& rng) {
  FamilyGenOptions opt;
  opt.nodes = draw(rng, 3, 8);
  opt.max_links = kMaxLinks;
  opt.extra_links = draw(rng, 0, 3);
  opt.leaf_to_leaf = leaf_to_leaf;
  return random_family_instance(kind, opt, rng);
}

FamilyInstance cycle_instance(std::size_t n, std::vector<Link> links) {
  FamilyInstance inst;
  inst.kind = FamilyKind::cactus;
  inst.nodes = n;
  std::vector<Node> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  inst.cycles = {cyc};
  inst.links = std::move(links);
  return inst;
}

bool reduction_soundness() {
  Criterion c("reduction soundness (cactus and block-tree, every link subset)");
  Rng rng(1001);
  const auto start = std::chrono::steady_clock::now();
  std::size_t subsets = 0;
  for (std::size_t iter = 0; iter < kReductionInstances; ++iter) {
    const FamilyInstance inst =
        random_instance(iter % 2 == 0 ? FamilyKind::cactus : FamilyKind::blocktree, false, rng);
    const auto o = inst.oracle();
    const IncidenceGraph h = build_incidence(*o, o->leaves(), inst.links);
    c.check(check_property_star(h), tag("star property", iter));
    const std::size_t m = inst.links.size();
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      const auto idx = fixture::subset(mask, m);
      const bool via_h = sscds_feasible(h, idx);
      const bool direct = fixture::brute_feasible(inst, fixture::pick(inst.links, idx));
      c.check(via_h == direct, tag("subset disagreement", iter));
      ++subsets;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check(seconds < kReductionSeconds, "time limit");
  c.note() << subsets << " subsets in " << seconds << " s";
  return c.report();
}

bool leaf_to_leaf() {
  Criterion c("leaf-to-leaf ratio and certificates");
  {
    const FamilyInstance c4 = cycle_instance(4, {{0, 2}, {1, 3}});
    const LeafToLeafReport rep = solve_leaf_to_leaf(*c4.oracle(), c4.links);
    c.check(rep.solution.size() == 2 && fixture::brute_opt(c4) == 2, "C4 size");
    const FamilyInstance c6 = cycle_instance(6, {{0, 3}, {1, 4}, {2, 5}});
    const LeafToLeafReport rep6 = solve_leaf_to_leaf(*c6.oracle(), c6.links);
    c.check(rep6.solution.size() == 3 && fixture::brute_opt(c6) == 3, "C6 size");
    c.check(rep6.single_steps == 1, "C6 single-link step count");
  }
  Rng rng(1002);
  std::size_t worst_num = 0, worst_den = 1;
  for (std::size_t iter = 0; iter < kLeafInstances; ++iter) {
    const FamilyInstance inst =
        random_instance(iter % 2 == 0 ? FamilyKind::cactus : FamilyKind::blocktree, true, rng);
    const auto o = inst.oracle();
    const LeafToLeafReport rep = solve_leaf_to_leaf(*o, inst.links);
    const std::size_t size = rep.solution.size();
    const std::size_t opt = fixture::brute_opt(inst);
    c.check(fixture::brute_feasible(inst, fixture::pick(inst.links, rep.solution)), tag("feasible", iter));
    c.check(3 * size <= 5 * opt, tag("5/3 ratio", iter));
    c.check(3 * size + 3 <= 2 * rep.ell + rep.ell_prime, tag("size bound", iter));
    const std::size_t half = (rep.ell + 1) / 2;
    c.check(half <= opt, tag("half-leaf bound", iter));
    c.check(rep.ell_prime == 0 || rep.ell_prime - 1 <= opt, tag("residual-leaf bound", iter));
    if (size * worst_den > worst_num * opt) {
      worst_num = size;
      worst_den = opt;
    }
  }
  c.note() << "worst ratio " << worst_num << "/" << worst_den;
  return c.report();
}

bool relative_greedy_suite() {
  Criterion c("relative greedy (k = 2)");
  Rng rng(1003);
  const FamilyKind kinds[] = {FamilyKind::cactus, FamilyKind::blocktree, FamilyKind::laminar};
  double worst = 0;
  std::size_t bound_checked = 0;
  for (std::size_t iter = 0; iter < kGreedyInstances; ++iter) {
    const FamilyInstance inst = random_instance(kinds[iter % 3], false, rng);
    const auto o = inst.oracle();
    const RelativeGreedyReport rep = relative_greedy(*o, inst.links, 2);
    const std::size_t opt = fixture::brute_opt(inst);
    c.check(fixture::brute_feasible(inst, fixture::pick(inst.links, rep.solution)), tag("feasible", iter));
    std::size_t nu = rep.nu_initial;
    for (const GreedyIteration& step : rep.trace) {
      c.check(step.nu_before == nu && step.nu_after < step.nu_before, tag("potential decrease", iter));
      c.check(step.density() <= 1.0, tag("density", iter));
      nu = step.nu_after;
    }
    c.check(2 * opt >= rep.solution.size(), tag("ratio ceiling", iter));
    // With the optimum itself as the reference set the bound reads
    // 1 + ln(nu(empty) / opt).
    if (rep.exhaustive && opt > 0 && rep.nu_initial >= opt) {
      const double bound = 1.0 + std::log(static_cast<double>(rep.nu_initial) / static_cast<double>(opt));
      c.check(static_cast<double>(rep.solution.size()) <= bound * static_cast<double>(opt) + kBoundSlack,
              tag("a-posteriori bound", iter));
      ++bound_checked;
    }
    if (opt > 0) worst = std::max(worst, static_cast<double>(rep.solution.size()) / static_cast<double>(opt));
  }
  c.note() << "worst ratio " << worst << ", a-posteriori bound checked on " << bound_checked;
  return c.report();
}

bool conversions() {
  Criterion c("Steiner tree and dominating-set conversions");
  Rng rng(1004);
  const FamilyKind kinds[] = {FamilyKind::cactus, FamilyKind::blocktree, FamilyKind::laminar};
  for (std::size_t iter = 0; iter < kConversionInstances; ++iter) {
    const FamilyInstance inst = random_instance(kinds[iter % 3], false, rng);
    const auto o = inst.oracle();
    const IncidenceGraph h = build_incidence(*o, o->leaves(), inst.links);
    const std::size_t r = h.terminal_count();
    c.check(check_property_star(h), tag("star property", iter));

    std::vector<std::size_t> nodes(h.link_count());
    std::iota(nodes.begin(), nodes.end(), 0);
    const auto terms = fixture::terminal_ids(h);
    nodes.insert(nodes.end(), terms.begin(), terms.end());
    const auto tree = fixture::prune_link_leaves(h, fixture::random_spanning_tree(h, nodes, rng));
    const auto s = steiner_to_sscds(h, tree);
    c.check(s.size() + r == tree.size() + 1, tag("tree to set size", iter));
    c.check(sscds_feasible(h, s), tag("tree to set feasible", iter));
    c.check(o->is_feasible(fixture::pick(inst.links, [&] {
              std::vector<std::size_t> idx;
              for (std::size_t x : s) idx.push_back(h.link_index[x]);
              return idx;
            }())),
            tag("set is a cover", iter));
    if (s.empty()) continue;
    const auto back = sscds_to_steiner(h, s);
    c.check(back.size() == s.size() + r - 1, tag("set to tree size", iter));
    const auto again = steiner_to_sscds(h, back);
    c.check(again.size() == s.size() && sscds_feasible(h, again), tag("round trip", iter));
  }
  return c.report();
}

bool ratio_equation() {
  Criterion c("combined ratio equation");
  const CombinedRatio a = combined_ratio(std::log(4.0));
  c.check(std::abs(a.x - 1.4367) <= kRatioTolerance, "x at ln 4");
  c.check(a.ratio < 1.942, "ratio at ln 4");
  const CombinedRatio b = combined_ratio(1.35);
  c.check(std::abs(b.ratio - 1.895) <= kRatioTolerance, "ratio at 1.35");
  c.note() << "ln 4: x = " << a.x << ", ratio = " << a.ratio << "; 1.35: ratio = " << b.ratio;
  return c.report();
}

bool brute_covers(const SetFunction& p, const std::vector<Edge>& j) {
  for (Mask a = 0; a <= p.full(); ++a) {
    if (static_cast<int>(oracle::crossing(j, a)) < p.value(a)) return false;
  }
  return true;
}

bool pairwise_connectivity_met(const ElemConnInstance& inst, const std::vector<Edge>& j) {
  const ElemConnInstance aug = inst.with_edges(j);
  const auto flags = aug.terminal_flags();
  for (std::size_t a = 0; a < inst.terminals.size(); ++a) {
    for (std::size_t b = a + 1; b < inst.terminals.size(); ++b) {
      if (static_cast<int>(element_connectivity(aug.graph, flags, aug.terminals[a], aug.terminals[b])) <
          inst.requirement[a][b]) {
        return false;
      }
    }
  }
  return true;
}

struct Suite {
  std::vector<std::shared_ptr<const SetFunction>> functions;
  std::vector<ElemConnInstance> elemconn;  // aligned with the tail of `functions`
};

Suite build_suite() {
  Suite s;
  Rng rng(1005);
  for (std::size_t i = 0; i < kSetFunctionInstances; ++i) {
    s.functions.push_back(random_setfunction(draw(rng, 2, 8), 3, rng).function());
  }
  for (std::size_t i = 0; i < kElemConnInstances; ++i) {
    ElemConnGenOptions opt;
    opt.terminals = draw(rng, 2, 6);
    opt.steiner_nodes = draw(rng, 0, 4);
    opt.r_max = 3;
    s.elemconn.push_back(random_elemconn(opt, rng));
    s.functions.push_back(std::make_shared<ElemConnFunction>(s.elemconn.back()));
  }
  return s;
}

bool sf_cover(const Suite& suite) {
  Criterion c("skew-supermodular greedy cover");
  double worst = 0;
  int max_t = 0;
  std::size_t nontrivial = 0, split_runs = 0;
  for (std::size_t iter = 0; iter < suite.functions.size(); ++iter) {
    const auto& p = suite.functions[iter];
    c.check(p->max_value() <= 3, tag("demand cap", iter));
    const Transversal g = minimal_transversal(*p);
    const int subpartition =
        oracle::max_subpartition(p->ground_size(), [&p](std::uint32_t a) { return p->value(a); });
    c.check(weight(g, p->full()) == std::max(subpartition, 0), tag("transversal value", iter));
    c.check(max_subpartition_value(*p) == subpartition, tag("subpartition value", iter));

    const GreedyCoverReport rep = greedy_cover(p, g);
    max_t = std::max(max_t, rep.t);
    if (rep.t >= 4) ++nontrivial;
    if (rep.k > 0) ++split_runs;
    c.check(brute_covers(*p, rep.solution()), tag("covers", iter));
    c.check(static_cast<int>(rep.size()) <= rep.t - static_cast<int>(rep.k), tag("size bound", iter));
    const auto after = residual(p, rep.split_edges);
    if (!rep.final_terminals.empty()) {
      c.check(after->max_value() == 1 && rep.final_g_max == 1, tag("stop state", iter));
    } else {
      c.check(after->max_value() <= 0, tag("nothing left", iter));
    }
    c.check(rep.stop_state_ok, tag("stop flag", iter));
    const std::size_t opt = exact_min_sfcover(p).size();
    c.check(2 * rep.size() <= 3 * opt, tag("3/2 ratio", iter));
    if (opt > 0) worst = std::max(worst, static_cast<double>(rep.size()) / static_cast<double>(opt));
  }
  c.note() << suite.functions.size() << " functions, " << nontrivial << " with t >= 4, " << split_runs
           << " with split-offs, max t " << max_t << ", worst ratio " << worst;
  return c.report();
}

bool degree_bounded(const Suite& suite) {
  Criterion c("degree-bounded cover");
  Rng rng(1006);
  std::size_t rejected = 0;
  for (std::size_t iter = 0; iter < suite.functions.size(); ++iter) {
    const auto& p = suite.functions[iter];
    const Transversal b = random_feasible_bounds(*p, rng);
    const GreedyCoverReport rep = degree_bounded_cover(p, b);
    c.check(brute_covers(*p, rep.solution()), tag("covers", iter));
    std::vector<std::size_t> degree(p->ground_size(), 0);
    for (const Edge& e : rep.solution()) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (std::size_t v = 0; v < degree.size(); ++v) {
      c.check(static_cast<int>(degree[v]) <= b[v] + 1, tag("degree", iter));
    }
    if (const auto bad = random_infeasible_bounds(*p, rng)) {
      bool thrown = false;
      try {
        degree_bounded_cover(p, *bad);
      } catch (const InfeasibleError& e) {
        thrown = std::string(e.what()) == "no feasible solution";
      }
      c.check(thrown, tag("infeasible bounds", iter));
      ++rejected;
    }
  }
  c.note() << rejected << " infeasible bound vectors rejected";
  return c.report();
}

bool elemconn_agreement(const Suite& suite) {
  Criterion c("element-connectivity agreement");
  Rng rng(1007);
  const std::size_t offset = suite.functions.size() - suite.elemconn.size();
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < suite.elemconn.size(); ++i) {
    const ElemConnInstance& inst = suite.elemconn[i];
    const auto& p = suite.functions[offset + i];
    const std::vector<Edge> greedy = greedy_cover(p, minimal_transversal(*p)).solution();
    std::vector<std::vector<Edge>> trials{{}, greedy};
    // Random prefixes of the greedy answer and random edge sets.
    if (!greedy.empty()) trials.emplace_back(greedy.begin(), greedy.end() - 1);
    const std::size_t t = inst.terminals.size();
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Edge> j;
      for (std::size_t e = draw(rng, 0, 4); e > 0; --e) {
        const std::size_t u = draw(rng, 0, t - 1), v = (u + 1 + draw(rng, 0, t - 2)) % t;
        j.push_back({u, v});
      }
      trials.push_back(j);
    }
    for (const auto& j : trials) {
      const bool cov = covers(*p, j);
      if (!cov) ++negatives;
      c.check(cov == pairwise_connectivity_met(inst, j), tag("verdict", i));
    }
  }
  c.note() << negatives << " non-covering edge sets among the trials";
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  ok &= reduction_soundness();
  ok &= leaf_to_leaf();
  ok &= relative_greedy_suite();
  ok &= conversions();
  ok &= ratio_equation();
  const Suite suite = build_suite();
  ok &= sf_cover(suite);
  ok &= degree_bounded(suite);
  ok &= elemconn_agreement(suite);
  return ok ? 0 : 1;
}
