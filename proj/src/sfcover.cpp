#include "aug/sfcover.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "aug/error.hpp"

namespace aug {

namespace {

void require_ground(std::size_t n, std::size_t limit) {
  if (n > limit) throw SizeGuardError("ground set too large for subset enumeration");
}

}  // namespace

int SetFunction::max_value() const {
  int best = std::numeric_limits<int>::min();
  for (Mask a = 0; a <= full(); ++a) {
    best = std::max(best, value(a));
    if (a == full()) break;
  }
  return best;
}

TableFunction::TableFunction(std::size_t n, std::vector<int> values)
    : n_(n), values_(std::move(values)) {
  require_ground(n, kMaxGround);
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("table needs one value per subset");
  }
}

std::vector<bool> ElemConnInstance::terminal_flags() const {
  std::vector<bool> flags(graph.node_count(), false);
  for (Node v : terminals) flags.at(v) = true;
  return flags;
}

void ElemConnInstance::validate() const {
  const std::size_t t = terminals.size();
  require_ground(t, kMaxGround);
  std::vector<bool> seen(graph.node_count(), false);
  for (Node v : terminals) {
    if (v >= graph.node_count()) throw std::invalid_argument("terminal out of range");
    if (seen[v]) throw std::invalid_argument("duplicate terminal");
    seen[v] = true;
  }
  if (requirement.size() != t) throw std::invalid_argument("requirement matrix has wrong size");
  for (std::size_t i = 0; i < t; ++i) {
    if (requirement[i].size() != t) throw std::invalid_argument("requirement matrix has wrong size");
    for (std::size_t j = 0; j < t; ++j) {
      if (requirement[i][j] != requirement[j][i]) {
        throw std::invalid_argument("requirements must be symmetric");
      }
      if (requirement[i][j] < 0) throw std::invalid_argument("requirements must be nonnegative");
    }
  }
  if (bounds) {
    if (bounds->size() != t) throw std::invalid_argument("one degree bound per terminal");
    for (int b : *bounds) {
      if (b < 0) throw std::invalid_argument("degree bounds must be nonnegative");
    }
  }
}

ElemConnInstance ElemConnInstance::with_edges(const std::vector<Edge>& extra) const {
  ElemConnInstance out = *this;
  for (const Edge& e : extra) out.graph.add_edge(terminals.at(e.u), terminals.at(e.v));
  return out;
}

ElemConnFunction::ElemConnFunction(ElemConnInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
  is_terminal_ = inst_.terminal_flags();
}

int ElemConnFunction::value(Mask a) const {
  const std::size_t t = inst_.terminals.size();
  if (a == 0 || a == full()) return 0;
  {
    std::lock_guard lock(mutex_);
    if (const auto it = memo_.find(a); it != memo_.end()) return it->second;
  }
  int demand = 0;
  std::vector<Node> inside, outside;
  for (std::size_t i = 0; i < t; ++i) {
    (has(a, i) ? inside : outside).push_back(inst_.terminals[i]);
    if (!has(a, i)) continue;
    for (std::size_t j = 0; j < t; ++j) {
      if (!has(a, j)) demand = std::max(demand, inst_.requirement[i][j]);
    }
  }
  const int flow = static_cast<int>(element_flow(inst_.graph, is_terminal_, inside, outside));
  const int p = demand - flow;
  std::lock_guard lock(mutex_);
  memo_.emplace(a, p);
  return p;
}

std::size_t cut_degree(const std::vector<Edge>& edges, Mask a) {
  std::size_t d = 0;
  for (const Edge& e : edges) d += has(a, e.u) != has(a, e.v) ? 1 : 0;
  return d;
}

ResidualFunction::ResidualFunction(std::shared_ptr<const SetFunction> base,
                                   std::vector<Edge> added)
    : base_(std::move(base)), added_(std::move(added)) {
  for (const Edge& e : added_) {
    if (e.u == e.v || e.u >= base_->ground_size() || e.v >= base_->ground_size()) {
      throw std::invalid_argument("residual edge out of range");
    }
  }
}

int ResidualFunction::value(Mask a) const {
  const int p = base_->value(a);
  const std::size_t d = cut_degree(added_, a);
  if (d == 0) return p;
  return std::max(p - static_cast<int>(d), 0);
}

std::shared_ptr<const SetFunction> residual(const std::shared_ptr<const SetFunction>& p,
                                            const std::vector<Edge>& added) {
  if (const auto* r = dynamic_cast<const ResidualFunction*>(p.get())) {
    std::vector<Edge> all = r->added();
    all.insert(all.end(), added.begin(), added.end());
    return std::make_shared<ResidualFunction>(r->base(), std::move(all));
  }
  return std::make_shared<ResidualFunction>(p, added);
}

SkewCheck validate_skew_supermodular(const SetFunction& p) {
  require_ground(p.ground_size(), 16);
  const Mask s = p.full();
  const std::uint64_t count = std::uint64_t{1} << p.ground_size();
  std::vector<int> v(count);
  for (std::uint64_t a = 0; a < count; ++a) v[a] = p.value(static_cast<Mask>(a));

  SkewCheck out;
  for (std::uint64_t a = 0; a < count; ++a) {
    if (v[a] != v[s & ~static_cast<Mask>(a)]) {
      out.ok = false;
      out.symmetric = false;
      out.a = static_cast<Mask>(a);
      out.b = s & ~static_cast<Mask>(a);
      return out;
    }
  }
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = a + 1; b < count; ++b) {
      const int lhs = v[a] + v[b];
      if (lhs <= v[a & b] + v[a | b] || lhs <= v[a & ~b] + v[b & ~a]) continue;
      out.ok = false;
      out.a = static_cast<Mask>(a);
      out.b = static_cast<Mask>(b);
      return out;
    }
  }
  return out;
}

int weight(const Transversal& g, Mask a) {
  int w = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (has(a, v)) w += g[v];
  }
  return w;
}

Mask support(const Transversal& g) {
  Mask m = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g[v] >= 1) m |= Mask{1} << v;
  }
  return m;
}

bool is_transversal(const SetFunction& p, const Transversal& g) {
  if (g.size() != p.ground_size()) throw std::invalid_argument("transversal has wrong size");
  if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; })) return false;
  const Mask s = p.full();
  for (Mask a = 0;; ++a) {
    if (weight(g, a) < p.value(a)) return false;
    if (a == s) break;
  }
  return true;
}

Transversal minimalize(const SetFunction& p, Transversal g) {
  const std::size_t n = p.ground_size();
  require_ground(n, kMaxGround);
  if (!is_transversal(p, g)) throw InfeasibleError("no feasible solution");
  const Mask s = p.full();
  for (std::size_t v = 0; v < n; ++v) {
    int need = 0;
    const Mask bit = Mask{1} << v;
    const Mask rest = s & ~bit;
    // Every A containing v is bit | B with B a subset of rest.
    for (Mask b = rest;; b = (b - 1) & rest) {
      need = std::max(need, p.value(b | bit) - weight(g, b));
      if (b == 0) break;
    }
    g[v] = need;
  }
  return g;
}

Transversal minimal_transversal(const SetFunction& p) {
  const std::size_t n = p.ground_size();
  require_ground(n, kMaxGround);
  Transversal g(n, 0);
  const Mask s = p.full();
  for (Mask a = 0;; ++a) {
    const int val = p.value(a);
    for (std::size_t v = 0; v < n; ++v) {
      if (has(a, v)) g[v] = std::max(g[v], val);
    }
    if (a == s) break;
  }
  return minimalize(p, std::move(g));
}

int max_subpartition_value(const SetFunction& p) {
  const std::size_t n = p.ground_size();
  require_ground(n, 14);
  const std::size_t count = std::size_t{1} << n;
  std::vector<int> val(count), best(count, 0);
  for (std::size_t a = 0; a < count; ++a) val[a] = p.value(static_cast<Mask>(a));
  for (std::size_t m = 1; m < count; ++m) {
    const std::size_t low = m & (~m + 1);
    const std::size_t rest = m & ~low;
    int b = best[rest];  // lowest element left uncovered
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t part = sub | low;
      b = std::max(b, val[part] + best[m & ~part]);
      if (sub == 0) break;
    }
    best[m] = b;
  }
  return best[count - 1];
}

SplitResult split_off(const std::shared_ptr<const SetFunction>& p, const Transversal& g,
                      std::size_t u, std::size_t v) {
  if (u == v || u >= g.size() || v >= g.size() || g[u] < 1 || g[v] < 1) {
    throw std::invalid_argument("split-off needs two distinct elements of the support");
  }
  SplitResult out{residual(p, {Edge{u, v}}), g};
  --out.g[u];
  --out.g[v];
  return out;
}

bool is_legal_pair(const SetFunction& p, const Transversal& g, std::size_t u, std::size_t v) {
  if (u == v || u >= g.size() || v >= g.size() || g[u] < 1 || g[v] < 1) {
    throw std::invalid_argument("legality needs two distinct elements of the support");
  }
  const Mask s = p.full();
  for (Mask a = 0;; ++a) {
    const bool hu = has(a, u), hv = has(a, v);
    const int pa = p.value(a);
    const int pv = hu != hv ? std::max(pa - 1, 0) : pa;
    const int gv = weight(g, a) - (hu ? 1 : 0) - (hv ? 1 : 0);
    if (gv < pv) return false;
    if (a == s) break;
  }
  return true;
}

bool covers(const SetFunction& p, const std::vector<Edge>& edges) {
  const Mask s = p.full();
  for (Mask a = 0;; ++a) {
    if (static_cast<int>(cut_degree(edges, a)) < p.value(a)) return false;
    if (a == s) break;
  }
  return true;
}

std::vector<Edge> GreedyCoverReport::solution() const {
  std::vector<Edge> out = split_edges;
  out.insert(out.end(), final_edges.begin(), final_edges.end());
  return out;
}

bool GreedyCoverReport::size_bound_ok() const {
  return static_cast<long>(size()) <= static_cast<long>(t) - static_cast<long>(k);
}

GreedyCoverReport greedy_cover(const std::shared_ptr<const SetFunction>& p, Transversal g,
                               GreedyOptions options) {
  const std::size_t n = p->ground_size();
  require_ground(n, kMaxGround);
  if (!is_transversal(*p, g)) throw InfeasibleError("no feasible solution");

  GreedyCoverReport report;
  report.t = weight(g, p->full());
  std::shared_ptr<const SetFunction> cur = p;
  bool split = true;
  while (split) {
    split = false;
    for (std::size_t u = 0; u < n && !split; ++u) {
      if (g[u] < 1) continue;
      for (std::size_t v = u + 1; v < n && !split; ++v) {
        if (g[v] < 1 || !is_legal_pair(*cur, g, u, v)) continue;
        SplitResult next = split_off(cur, g, u, v);
        report.split_edges.push_back({u, v});
        cur = std::move(next.p);
        g = std::move(next.g);
        if (options.reminimalize) g = minimalize(*cur, std::move(g));
        split = true;
      }
    }
  }
  report.k = report.split_edges.size();

  for (std::size_t v = 0; v < n; ++v) {
    if (g[v] == 1) report.final_terminals.push_back(v);
  }
  const auto& tp = report.final_terminals;
  for (std::size_t i = 1; i < tp.size(); ++i) {
    const std::size_t from = options.mode == FinishMode::tree ? tp.front() : tp[i - 1];
    report.final_edges.push_back({from, tp[i]});
  }

  report.final_p_max = std::max(cur->max_value(), 0);
  report.final_g_max = g.empty() ? 0 : *std::max_element(g.begin(), g.end());
  report.stop_state_ok =
      (report.final_p_max == 0 && report.final_g_max == 0) ||
      (report.final_p_max == 1 && report.final_g_max == 1 && tp.size() >= 3);

  report.degree.assign(n, 0);
  for (const Edge& e : report.solution()) {
    ++report.degree[e.u];
    ++report.degree[e.v];
  }
  return report;
}

GreedyCoverReport degree_bounded_cover(const std::shared_ptr<const SetFunction>& p,
                                       const Transversal& bounds) {
  if (bounds.size() != p->ground_size()) throw std::invalid_argument("one bound per element");
  if (!is_transversal(*p, bounds)) throw InfeasibleError("no feasible solution");
  return greedy_cover(p, minimalize(*p, bounds), {FinishMode::path, true});
}

GreedyCoverReport degree_bounded_cover(const ElemConnInstance& inst) {
  if (!inst.bounds) throw std::invalid_argument("degree-bounded mode needs bounds");
  auto p = std::make_shared<ElemConnFunction>(inst);
  return degree_bounded_cover(p, *inst.bounds);
}

std::pair<std::size_t, std::size_t> sf_lower_bounds(const GreedyCoverReport& report) {
  const std::size_t t = static_cast<std::size_t>(std::max(report.t, 0));
  const std::size_t rest = t >= report.k ? t - report.k : 0;
  return {(t + 1) / 2, (2 * rest + 2) / 3};
}

int max_degree_violation(const GreedyCoverReport& report, const Transversal& bounds) {
  int worst = std::numeric_limits<int>::min();
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    worst = std::max(worst, static_cast<int>(report.degree.at(v)) - bounds[v]);
  }
  return worst;
}

}  // namespace aug
