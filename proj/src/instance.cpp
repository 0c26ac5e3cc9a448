#include "aug/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace aug {

using nlohmann::json;

std::unique_ptr<FamilyOracle> FamilyInstance::oracle() const {
  switch (kind) {
    case FamilyKind::cactus: {
      Cactus c = Cactus::from_cycles(nodes, cycles);
      validate_cactus(c);
      return std::make_unique<CactusOracle>(std::move(c));
    }
    case FamilyKind::blocktree:
      return std::make_unique<BlockTreeOracle>(nodes, tree_edges);
    case FamilyKind::laminar:
      return std::make_unique<LaminarOracle>(nodes, tree_edges);
  }
  throw std::logic_error("unknown family kind");
}

std::shared_ptr<const SetFunction> SetFunctionInstance::function() const {
  return std::make_shared<TableFunction>(ground.size(), table);
}

std::string_view kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cactus: return "cactus";
    case FamilyKind::blocktree: return "blocktree";
    case FamilyKind::laminar: return "laminar";
  }
  return "?";
}

std::string_view kind_name(const Instance& inst) {
  if (const auto* f = std::get_if<FamilyInstance>(&inst)) return kind_name(f->kind);
  if (std::holds_alternative<ElemConnInstance>(inst)) return "elemconn";
  return "setfunction";
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed instance: " + what);
}

std::size_t as_index(const json& v, std::size_t limit, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      static_cast<std::size_t>(v.get<long long>()) >= limit) {
    malformed(std::string(what) + " out of range");
  }
  return v.get<std::size_t>();
}

std::vector<Edge> edge_list(const json& j, const char* key, std::size_t n) {
  std::vector<Edge> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) malformed(std::string(key) + " must be an array");
  for (const json& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2) malformed(std::string(key) + " entries must be pairs");
    out.push_back({as_index(e[0], n, key), as_index(e[1], n, key)});
  }
  return out;
}

std::vector<Node> node_list(const json& j, const char* key, std::size_t n) {
  std::vector<Node> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) malformed(std::string(key) + " must be an array");
  for (const json& v : j.at(key)) out.push_back(as_index(v, n, key));
  return out;
}

json pairs(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  malformed("ground labels must be strings or integers");
}

std::string key_of(const std::vector<std::string>& ground, Mask a) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (has(a, i)) parts.push_back(ground[i]);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  return out;
}

FamilyInstance family_from_json(const json& j, FamilyKind kind) {
  FamilyInstance inst;
  inst.kind = kind;
  if (!j.contains("nodes") || !j.at("nodes").is_number_integer() || j.at("nodes").get<long long>() < 1) {
    malformed("nodes must be a positive integer");
  }
  inst.nodes = j.at("nodes").get<std::size_t>();
  if (kind == FamilyKind::cactus) {
    if (!j.contains("cycles") || !j.at("cycles").is_array()) malformed("cactus needs cycles");
    for (const json& c : j.at("cycles")) {
      if (!c.is_array()) malformed("cycles must be arrays");
      std::vector<Node> cycle;
      for (const json& v : c) cycle.push_back(as_index(v, inst.nodes, "cycle node"));
      inst.cycles.push_back(std::move(cycle));
    }
  } else {
    if (!j.contains("tree_edges")) malformed("tree instance needs tree_edges");
    inst.tree_edges = edge_list(j, "tree_edges", inst.nodes);
  }
  inst.links = edge_list(j, "links", inst.nodes);
  inst.terminals = node_list(j, "terminals", inst.nodes);
  inst.oracle();
  return inst;
}

ElemConnInstance elemconn_from_json(const json& j) {
  if (!j.contains("nodes") || !j.at("nodes").is_number_integer() || j.at("nodes").get<long long>() < 1) {
    malformed("nodes must be a positive integer");
  }
  const std::size_t n = j.at("nodes").get<std::size_t>();
  ElemConnInstance inst;
  inst.graph = Multigraph(n);
  for (const Edge& e : edge_list(j, "edges", n)) {
    if (e.u == e.v) malformed("self-loop edge");
    inst.graph.add_edge(e.u, e.v);
  }
  inst.terminals = node_list(j, "terminals", n);
  std::map<Node, std::size_t> index;
  for (std::size_t i = 0; i < inst.terminals.size(); ++i) {
    if (!index.emplace(inst.terminals[i], i).second) malformed("duplicate terminal");
  }
  const std::size_t t = inst.terminals.size();
  inst.requirement.assign(t, std::vector<int>(t, 0));
  if (j.contains("requirements")) {
    for (const json& r : j.at("requirements")) {
      if (!r.is_array() || r.size() != 3 || !r[2].is_number_integer()) {
        malformed("requirements entries must be [u, v, r]");
      }
      const Node u = as_index(r[0], n, "requirement node");
      const Node v = as_index(r[1], n, "requirement node");
      if (!index.contains(u) || !index.contains(v)) malformed("requirement between non-terminals");
      if (u == v) malformed("requirement on a single node");
      const int val = r[2].get<int>();
      if (val < 0) malformed("negative requirement");
      inst.requirement[index[u]][index[v]] = val;
      inst.requirement[index[v]][index[u]] = val;
    }
  }
  if (j.contains("bounds")) {
    if (!j.at("bounds").is_object()) malformed("bounds must be an object keyed by node id");
    std::vector<int> b(t, 0);
    for (const auto& [key, val] : j.at("bounds").items()) {
      std::size_t pos = 0;
      unsigned long node = 0;
      try {
        node = std::stoul(key, &pos);
      } catch (const std::exception&) {
        malformed("bound key is not a node id");
      }
      if (pos != key.size() || !index.contains(node)) malformed("bound key is not a terminal");
      if (!val.is_number_integer() || val.get<int>() < 0) malformed("bounds must be nonnegative");
      b[index[node]] = val.get<int>();
    }
    inst.bounds = std::move(b);
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  return inst;
}

SetFunctionInstance setfunction_from_json(const json& j) {
  SetFunctionInstance inst;
  if (!j.contains("ground") || !j.at("ground").is_array()) malformed("setfunction needs ground");
  std::map<std::string, std::size_t> index;
  for (const json& v : j.at("ground")) {
    const std::string label = label_of(v);
    if (label.empty() || label.find(',') != std::string::npos) malformed("bad ground label");
    if (!index.emplace(label, inst.ground.size()).second) malformed("duplicate ground label");
    inst.ground.push_back(label);
  }
  if (inst.ground.size() > kMaxGround) malformed("ground set too large");
  inst.table.assign(std::size_t{1} << inst.ground.size(), 0);
  if (j.contains("table")) {
    if (!j.at("table").is_object()) malformed("table must be an object");
    for (const auto& [key, val] : j.at("table").items()) {
      Mask a = 0;
      std::stringstream ss(key);
      std::string part;
      while (!key.empty() && std::getline(ss, part, ',')) {
        const auto it = index.find(part);
        if (it == index.end()) malformed("table key uses unknown label '" + part + "'");
        a |= Mask{1} << it->second;
      }
      if (!val.is_number_integer()) malformed("table values must be integers");
      inst.table[a] = val.get<int>();
    }
  }
  if (j.contains("bounds")) {
    if (!j.at("bounds").is_object()) malformed("bounds must be an object keyed by label");
    std::vector<int> b(inst.ground.size(), 0);
    for (const auto& [key, val] : j.at("bounds").items()) {
      const auto it = index.find(key);
      if (it == index.end()) malformed("bound key is not a ground label");
      if (!val.is_number_integer() || val.get<int>() < 0) malformed("bounds must be nonnegative");
      b[it->second] = val.get<int>();
    }
    inst.bounds = std::move(b);
  }
  return inst;
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    malformed("missing kind");
  }
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "cactus") return family_from_json(j, FamilyKind::cactus);
    if (kind == "blocktree") return family_from_json(j, FamilyKind::blocktree);
    if (kind == "laminar") return family_from_json(j, FamilyKind::laminar);
    if (kind == "elemconn") return elemconn_from_json(j);
    if (kind == "setfunction") return setfunction_from_json(j);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  malformed("unknown kind '" + kind + "'");
}

json instance_to_json(const Instance& inst) {
  json j;
  if (const auto* f = std::get_if<FamilyInstance>(&inst)) {
    j["kind"] = kind_name(f->kind);
    j["nodes"] = f->nodes;
    if (f->kind == FamilyKind::cactus) {
      j["cycles"] = f->cycles;
    } else {
      j["tree_edges"] = pairs(f->tree_edges);
    }
    j["links"] = pairs(f->links);
    if (!f->terminals.empty()) j["terminals"] = f->terminals;
  } else if (const auto* e = std::get_if<ElemConnInstance>(&inst)) {
    j["kind"] = "elemconn";
    j["nodes"] = e->graph.node_count();
    j["edges"] = pairs({e->graph.edges().begin(), e->graph.edges().end()});
    j["terminals"] = e->terminals;
    json req = json::array();
    for (std::size_t a = 0; a < e->terminals.size(); ++a) {
      for (std::size_t b = a + 1; b < e->terminals.size(); ++b) {
        if (e->requirement[a][b] > 0) {
          req.push_back({e->terminals[a], e->terminals[b], e->requirement[a][b]});
        }
      }
    }
    j["requirements"] = req;
    if (e->bounds) {
      json b = json::object();
      for (std::size_t a = 0; a < e->terminals.size(); ++a) {
        b[std::to_string(e->terminals[a])] = (*e->bounds)[a];
      }
      j["bounds"] = b;
    }
  } else {
    const auto& s = std::get<SetFunctionInstance>(inst);
    j["kind"] = "setfunction";
    j["ground"] = s.ground;
    json table = json::object();
    for (std::size_t a = 0; a < s.table.size(); ++a) {
      if (s.table[a] != 0) table[key_of(s.ground, static_cast<Mask>(a))] = s.table[a];
    }
    j["table"] = table;
    if (s.bounds) {
      json b = json::object();
      for (std::size_t i = 0; i < s.ground.size(); ++i) b[s.ground[i]] = (*s.bounds)[i];
      j["bounds"] = b;
    }
  }
  return j;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  return instance_from_json(j);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

json solution_to_json(const Instance& inst, const std::vector<Edge>& edges) {
  json j;
  if (std::holds_alternative<FamilyInstance>(inst)) {
    j["links"] = pairs(edges);
  } else if (const auto* e = std::get_if<ElemConnInstance>(&inst)) {
    std::vector<Edge> mapped;
    for (const Edge& x : edges) mapped.push_back({e->terminals.at(x.u), e->terminals.at(x.v)});
    j["edges"] = pairs(mapped);
  } else {
    const auto& s = std::get<SetFunctionInstance>(inst);
    json out = json::array();
    for (const Edge& x : edges) out.push_back({s.ground.at(x.u), s.ground.at(x.v)});
    j["edges"] = out;
  }
  return j;
}

std::vector<Edge> solution_from_json(const Instance& inst, const json& j) {
  if (!j.is_object()) malformed("solution must be an object");
  try {
    if (const auto* f = std::get_if<FamilyInstance>(&inst)) {
      if (!j.contains("links")) malformed("solution needs links");
      return edge_list(j, "links", f->nodes);
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) malformed("solution needs edges");
    std::vector<Edge> out;
    if (const auto* e = std::get_if<ElemConnInstance>(&inst)) {
      for (const Edge& x : edge_list(j, "edges", e->graph.node_count())) {
        const auto iu = std::find(e->terminals.begin(), e->terminals.end(), x.u);
        const auto iv = std::find(e->terminals.begin(), e->terminals.end(), x.v);
        if (iu == e->terminals.end() || iv == e->terminals.end() || x.u == x.v) {
          malformed("solution edges must join two distinct terminals");
        }
        out.push_back({static_cast<std::size_t>(iu - e->terminals.begin()),
                       static_cast<std::size_t>(iv - e->terminals.begin())});
      }
      return out;
    }
    const auto& s = std::get<SetFunctionInstance>(inst);
    for (const json& x : j.at("edges")) {
      if (!x.is_array() || x.size() != 2) malformed("solution edges must be pairs");
      const auto iu = std::find(s.ground.begin(), s.ground.end(), label_of(x[0]));
      const auto iv = std::find(s.ground.begin(), s.ground.end(), label_of(x[1]));
      if (iu == s.ground.end() || iv == s.ground.end() || iu == iv) {
        malformed("solution edges must join two distinct ground labels");
      }
      out.push_back({static_cast<std::size_t>(iu - s.ground.begin()),
                     static_cast<std::size_t>(iv - s.ground.begin())});
    }
    return out;
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace aug
