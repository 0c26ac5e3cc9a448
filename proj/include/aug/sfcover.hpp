#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aug/graph.hpp"

namespace aug {

/// Subset of a ground set {0, ..., n-1}, bit i for element i.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxGround = 20;

inline Mask full_mask(std::size_t n) { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }
inline bool has(Mask a, std::size_t v) { return (a >> v & 1U) != 0; }

/// Integer-valued function on the subsets of a small ground set.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual std::size_t ground_size() const = 0;
  virtual int value(Mask a) const = 0;

  Mask full() const { return full_mask(ground_size()); }
  /// Largest value over all subsets.
  int max_value() const;
};

class TableFunction final : public SetFunction {
 public:
  /// `values[a]` is p(a); the vector must have 2^n entries.
  TableFunction(std::size_t n, std::vector<int> values);

  std::size_t ground_size() const override { return n_; }
  int value(Mask a) const override { return values_.at(a); }

 private:
  std::size_t n_;
  std::vector<int> values_;
};

/// Element-connectivity augmentation data. Ground element i of the derived
/// set function is terminals[i].
struct ElemConnInstance {
  Multigraph graph;
  std::vector<Node> terminals;
  std::vector<std::vector<int>> requirement;  // terminal-index matrix, symmetric
  std::optional<std::vector<int>> bounds;     // per terminal index

  std::vector<bool> terminal_flags() const;
  /// Throws std::invalid_argument on asymmetric or malformed data.
  void validate() const;
  /// Copy of the instance with `extra` added, endpoints as terminal indices.
  ElemConnInstance with_edges(const std::vector<Edge>& extra) const;
};

/// p(A) = max r(u, v) over u in A, v outside A, minus the element flow from
/// A to its complement; p of the empty and full set is 0. Values are memoized.
class ElemConnFunction final : public SetFunction {
 public:
  explicit ElemConnFunction(ElemConnInstance inst);

  std::size_t ground_size() const override { return inst_.terminals.size(); }
  int value(Mask a) const override;
  const ElemConnInstance& instance() const { return inst_; }

 private:
  ElemConnInstance inst_;
  std::vector<bool> is_terminal_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Mask, int> memo_;
};

/// p after adding the multiset J: max(p(A) - d_J(A), 0) where d_J(A) >= 1,
/// and p(A) elsewhere.
class ResidualFunction final : public SetFunction {
 public:
  ResidualFunction(std::shared_ptr<const SetFunction> base, std::vector<Edge> added);

  std::size_t ground_size() const override { return base_->ground_size(); }
  int value(Mask a) const override;
  const std::vector<Edge>& added() const { return added_; }
  const std::shared_ptr<const SetFunction>& base() const { return base_; }

 private:
  std::shared_ptr<const SetFunction> base_;
  std::vector<Edge> added_;
};

/// Residual of p by J; residuals of residuals collapse onto the same base.
std::shared_ptr<const SetFunction> residual(const std::shared_ptr<const SetFunction>& p,
                                            const std::vector<Edge>& added);

/// Number of edges of J with exactly one end in A.
std::size_t cut_degree(const std::vector<Edge>& edges, Mask a);

struct SkewCheck {
  bool ok = true;
  bool symmetric = true;
  Mask a = 0;  // witness pair when !ok
  Mask b = 0;
};

/// Brute-force symmetry and skew-supermodularity check; ground size <= 16.
SkewCheck validate_skew_supermodular(const SetFunction& p);

using Transversal = std::vector<int>;  // g(v) per ground element

int weight(const Transversal& g, Mask a);
Mask support(const Transversal& g);
bool is_transversal(const SetFunction& p, const Transversal& g);

/// Lowers each coordinate in turn to the least value keeping g a
/// transversal. The result is minimal. `g` must already be a transversal.
Transversal minimalize(const SetFunction& p, Transversal g);

/// Minimal transversal from g(v) = max(0, max over A containing v of p(A)).
Transversal minimal_transversal(const SetFunction& p);

/// Maximum of sum p(A) over subpartitions of the ground set (3^n dynamic
/// program); ground size <= 14.
int max_subpartition_value(const SetFunction& p);

struct SplitResult {
  std::shared_ptr<const SetFunction> p;
  Transversal g;
};

/// Adds edge uv: separated sets drop by one (clipped at 0), g(u), g(v) drop
/// by one. Throws std::invalid_argument unless u != v are both in T_g.
SplitResult split_off(const std::shared_ptr<const SetFunction>& p, const Transversal& g,
                      std::size_t u, std::size_t v);

/// Whether g^{uv} remains a p^{uv}-transversal, by checking every subset.
bool is_legal_pair(const SetFunction& p, const Transversal& g, std::size_t u, std::size_t v);

/// d_J(A) >= p(A) for every A.
bool covers(const SetFunction& p, const std::vector<Edge>& edges);

enum class FinishMode { tree, path };

struct GreedyOptions {
  FinishMode mode = FinishMode::tree;
  /// Re-minimalize g after every split-off. false follows the bare loop.
  bool reminimalize = true;
};

struct GreedyCoverReport {
  std::vector<Edge> split_edges;   // M, in order
  std::vector<Edge> final_edges;   // F on T' = {g = 1}
  int t = 0;                       // g(S) of the initial transversal
  std::size_t k = 0;               // |M|
  std::vector<std::size_t> final_terminals;  // T'
  int final_p_max = 0;
  int final_g_max = 0;
  bool stop_state_ok = false;      // p'max = g'max = 1 with |T'| >= 3, or nothing left
  std::vector<std::size_t> degree; // d_J(v)

  std::vector<Edge> solution() const;
  std::size_t size() const { return split_edges.size() + final_edges.size(); }
  /// |M u F| <= t - k.
  bool size_bound_ok() const;
};

/// Splits off the lexicographically first legal pair of T_g while one
/// exists, then joins T' by a star (tree mode) or a path in index order.
/// Throws InfeasibleError("no feasible solution") when g is not a transversal.
GreedyCoverReport greedy_cover(const std::shared_ptr<const SetFunction>& p, Transversal g,
                               GreedyOptions options = {});

/// Degree-bounded variant: g = b, minimalized, then path mode. Every degree
/// stays within b(v) + 1.
GreedyCoverReport degree_bounded_cover(const std::shared_ptr<const SetFunction>& p,
                                       const Transversal& bounds);
GreedyCoverReport degree_bounded_cover(const ElemConnInstance& inst);

/// (ceil(t / 2), ceil(2 (t - k) / 3)); both bound the optimum from below.
std::pair<std::size_t, std::size_t> sf_lower_bounds(const GreedyCoverReport& report);

/// Largest violation max(d_J(v) - b(v)) over the ground set.
int max_degree_violation(const GreedyCoverReport& report, const Transversal& bounds);

}  // namespace aug
