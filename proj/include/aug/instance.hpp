#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "aug/family.hpp"
#include "aug/sfcover.hpp"

namespace aug {

enum class FamilyKind { cactus, blocktree, laminar };

/// Augmentation instance over a cactus, or over a tree whose target is
/// 2-connectivity (blocktree) or 2-edge-connectivity (laminar).
struct FamilyInstance {
  FamilyKind kind = FamilyKind::cactus;
  std::size_t nodes = 0;
  std::vector<std::vector<Node>> cycles;   // cactus only
  std::vector<Edge> tree_edges;            // blocktree and laminar
  std::vector<Link> links;
  std::vector<Node> terminals;             // optional

  std::unique_ptr<FamilyOracle> oracle() const;
};

/// Set function given by an explicit table over labelled ground elements.
struct SetFunctionInstance {
  std::vector<std::string> ground;
  std::vector<int> table;                  // 2^|ground| values, bit i = ground[i]
  std::optional<std::vector<int>> bounds;  // degree bounds per ground element

  std::shared_ptr<const SetFunction> function() const;
};

using Instance = std::variant<FamilyInstance, ElemConnInstance, SetFunctionInstance>;

std::string_view kind_name(FamilyKind kind);
std::string_view kind_name(const Instance& inst);

/// Throws std::invalid_argument on malformed input.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// A solution is an edge list. Family links and element-connectivity edges
/// use node ids; set-function edges use ground labels in JSON and ground
/// indices in memory, as do element-connectivity edges (terminal indices).
nlohmann::json solution_to_json(const Instance& inst, const std::vector<Edge>& edges);
std::vector<Edge> solution_from_json(const Instance& inst, const nlohmann::json& j);

}  // namespace aug
