#include "aug/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "aug/error.hpp"

namespace aug {

namespace {

bool is_forest(std::size_t n, std::span<const Link> links, std::span<const std::size_t> idx) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i : idx) {
    const std::size_t a = find(links[i].u), b = find(links[i].v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<Link> pick(std::span<const Link> links, std::span<const std::size_t> idx) {
  std::vector<Link> out;
  for (std::size_t i : idx) out.push_back(links[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> exact_min_cover(const FamilyOracle& oracle, std::span<const Link> links,
                                         std::size_t guard) {
  if (!oracle.is_feasible(links)) throw InfeasibleError("link set does not cover the family");
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!oracle.is_void(links[i])) usable.push_back(i);
  }
  const std::size_t m = usable.size();
  if (m > guard) throw SizeGuardError("too many links for the exact cover oracle");
  const std::size_t n = oracle.ground_size();

  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<std::size_t> pos(size);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      std::vector<std::size_t> idx;
      for (std::size_t p : pos) idx.push_back(usable[p]);
      if (is_forest(n, links, idx) && oracle.is_feasible(pick(links, idx))) return idx;
      std::size_t i = size;
      while (i > 0 && pos[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  throw InfeasibleError("link set does not cover the family");
}

std::vector<std::size_t> exhaustive_min_cover(const FamilyOracle& oracle,
                                              std::span<const Link> links) {
  const std::size_t m = links.size();
  if (m > 16) throw SizeGuardError("exhaustive cover search limited to 16 links");
  std::vector<std::size_t> best;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) idx.push_back(i);
    }
    if (found && idx.size() >= best.size()) continue;
    if (oracle.is_feasible(pick(links, idx))) {
      best = std::move(idx);
      found = true;
    }
  }
  if (!found) throw InfeasibleError("link set does not cover the family");
  return best;
}

namespace {

class SfSearch {
 public:
  SfSearch(const SetFunction& p, std::vector<std::size_t> support)
      : n_(p.ground_size()), count_(std::size_t{1} << n_), value_(count_), degree_(count_, 0) {
    for (std::size_t a = 0; a < count_; ++a) value_[a] = p.value(static_cast<Mask>(a));
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = i + 1; j < support.size(); ++j) pairs_.push_back({support[i], support[j]});
    }
    tally_.assign(pairs_.size(), 0);
  }

  void set_incumbent(std::vector<Edge> edges) {
    best_ = std::move(edges);
    best_size_ = best_.size();
  }

  void run() { search(); }
  const std::vector<Edge>& best() const { return best_; }
  bool found() const { return best_size_ != kNone; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  int deficiency(std::size_t a) const { return std::max(value_[a] - degree_[a], 0); }

  int subpartition_bound() const {
    if (n_ > 10) {
      int worst = 0;
      for (std::size_t a = 0; a < count_; ++a) worst = std::max(worst, deficiency(a));
      return worst;
    }
    std::vector<int> best(count_, 0);
    for (std::size_t m = 1; m < count_; ++m) {
      const std::size_t low = m & (~m + 1);
      const std::size_t rest = m & ~low;
      int b = best[rest];
      for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
        const std::size_t part = sub | low;
        b = std::max(b, deficiency(part) + best[m & ~part]);
        if (sub == 0) break;
      }
      best[m] = b;
    }
    return best[count_ - 1];
  }

  void apply(const Edge& e, int delta) {
    for (std::size_t a = 0; a < count_; ++a) {
      if (has(static_cast<Mask>(a), e.u) != has(static_cast<Mask>(a), e.v)) degree_[a] += delta;
    }
  }

  void search() {
    std::size_t target = count_;
    std::size_t target_pairs = kNone;
    for (std::size_t a = 0; a < count_; ++a) {
      if (deficiency(a) == 0) continue;
      std::size_t crossing = 0;
      for (const Edge& e : pairs_) {
        crossing += has(static_cast<Mask>(a), e.u) != has(static_cast<Mask>(a), e.v) ? 1 : 0;
      }
      if (crossing < target_pairs) {
        target = a;
        target_pairs = crossing;
      }
    }
    if (target == count_) {
      if (current_.size() < best_size_) set_incumbent(current_);
      return;
    }
    if (target_pairs == 0) return;
    const std::size_t lower = static_cast<std::size_t>(subpartition_bound() + 1) / 2;
    if (best_size_ != kNone && current_.size() + lower >= best_size_) return;
    if (!visited_.insert(std::string(tally_.begin(), tally_.end())).second) return;

    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const Edge& e = pairs_[i];
      if (has(static_cast<Mask>(target), e.u) == has(static_cast<Mask>(target), e.v)) continue;
      current_.push_back(e);
      ++tally_[i];
      apply(e, 1);
      search();
      apply(e, -1);
      --tally_[i];
      current_.pop_back();
    }
  }

  std::size_t n_;
  std::size_t count_;
  std::vector<int> value_;
  std::vector<int> degree_;
  std::vector<Edge> pairs_;
  std::vector<char> tally_;
  std::set<std::string> visited_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
  std::size_t best_size_ = kNone;
};

}  // namespace

std::vector<Edge> exact_min_sfcover(const std::shared_ptr<const SetFunction>& p,
                                    SfExactGuard guard) {
  if (p->ground_size() > 12) throw SizeGuardError("ground set too large for the exact cover");
  const Transversal g = minimal_transversal(*p);
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g[v] >= 1) support.push_back(v);
  }
  if (support.size() > guard.max_support || weight(g, p->full()) > guard.max_weight) {
    throw SizeGuardError("transversal too large for the exact cover");
  }
  if (support.empty()) return {};

  SfSearch search(*p, support);
  const std::vector<Edge> greedy = greedy_cover(p, g).solution();
  if (covers(*p, greedy)) search.set_incumbent(greedy);
  search.run();
  if (!search.found()) throw InfeasibleError("no feasible solution");
  return search.best();
}

std::vector<Edge> exhaustive_min_sfcover(const SetFunction& p, std::size_t max_edges) {
  const std::size_t n = p.ground_size();
  if (n > 5) throw SizeGuardError("exhaustive sfcover search limited to 5 elements");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for (std::size_t size = 0; size <= max_edges; ++size) {
    // Multisets of `size` pairs as non-decreasing index sequences.
    std::vector<std::size_t> pos(size, 0);
    if (size > 0 && pairs.empty()) break;
    while (true) {
      std::vector<Edge> edges;
      for (std::size_t i : pos) edges.push_back(pairs[i]);
      if (covers(p, edges)) return edges;
      std::size_t i = size;
      while (i > 0 && pos[i - 1] == pairs.size() - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < size; ++j) pos[j] = pos[i - 1];
    }
  }
  throw SizeGuardError("no cover within the edge limit");
}

}  // namespace aug
