#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aug/bench.hpp"
#include "aug/error.hpp"
#include "aug/exact.hpp"
#include "aug/generate.hpp"
#include "aug/instance.hpp"
#include "aug/relgreedy.hpp"
#include "aug/solve.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kViolation = 2;
constexpr int kUsage = 3;

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    aug::write_json_file(out, j);
  }
}

int cmd_solve(const std::string& in, const std::string& out, const aug::SolveOptions& opt) {
  const aug::Instance inst = aug::read_instance_file(in);
  const aug::SolveOutcome res = aug::solve(inst, opt);
  const aug::Verdict v = aug::verify(inst, res.edges);
  json j = {{"alg", res.alg},
            {"size", res.edges.size()},
            {"solution", aug::solution_to_json(inst, res.edges)},
            {"report", res.report},
            {"verified", v.feasible && v.agree},
            {"certificates_ok", res.certificates_ok}};
  emit(j, out);
  return v.feasible && v.agree && res.certificates_ok ? kOk : kViolation;
}

int cmd_verify(const std::string& in, const std::string& solution_path, const std::string& out) {
  const aug::Instance inst = aug::read_instance_file(in);
  std::ifstream s(solution_path);
  if (!s) throw std::invalid_argument("cannot open " + solution_path);
  json sj;
  try {
    sj = json::parse(s);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed solution: ") + e.what());
  }
  if (sj.contains("solution")) sj = sj.at("solution");
  const aug::Verdict v = aug::verify(inst, aug::solution_from_json(inst, sj));
  emit({{"feasible", v.feasible}, {"cross_check", v.cross_check}, {"agree", v.agree},
        {"method", v.method}},
       out);
  if (!v.agree) return kViolation;
  return v.feasible ? kOk : kInfeasible;
}

int cmd_oracle(const std::string& in, const std::string& out, std::size_t guard) {
  const aug::Instance inst = aug::read_instance_file(in);
  std::vector<aug::Edge> edges;
  if (const auto* f = std::get_if<aug::FamilyInstance>(&inst)) {
    for (std::size_t i : aug::exact_min_cover(*f->oracle(), f->links, guard)) {
      edges.push_back(f->links[i]);
    }
  } else if (const auto* e = std::get_if<aug::ElemConnInstance>(&inst)) {
    edges = aug::exact_min_sfcover(std::make_shared<aug::ElemConnFunction>(*e));
  } else {
    edges = aug::exact_min_sfcover(std::get<aug::SetFunctionInstance>(inst).function());
  }
  emit({{"opt", edges.size()}, {"solution", aug::solution_to_json(inst, edges)}}, out);
  return kOk;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, std::size_t threads,
              std::optional<std::size_t> guard, bool no_timing) {
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot open " + config_path);
  json cj;
  try {
    cj = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed bench config: ") + e.what());
  }
  aug::BenchConfig config = aug::bench_config_from_json(cj);
  if (threads > 0) config.threads = threads;
  if (guard) config.opt_guard = *guard;
  if (no_timing) config.timing = false;
  if (!out_dir.empty() && config.triage_dir.empty()) config.triage_dir = out_dir + "/triage";
  const aug::BenchReport report = aug::run_bench(config);
  const std::string csv = aug::bench_csv(report, config.timing);
  const json summary = aug::bench_json(report, config.timing);
  if (out_dir.empty()) {
    std::cout << csv;
  } else {
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/bench.csv") << csv;
    aug::write_json_file(out_dir + "/bench.json", summary);
  }
  std::cerr << "rows " << report.rows.size() << ", max ratio " << report.max_ratio
            << ", mean ratio " << report.mean_ratio << ", violations " << report.violations
            << '\n';
  return report.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity augmentation solvers, oracles and benchmarks"};
  app.require_subcommand(1);

  std::string in, out, solution, kind, config;
  std::string alg;
  std::size_t k = aug::kDefaultK;
  std::size_t n = 6;
  std::size_t guard = aug::kExactLinkGuard;
  std::size_t threads = 0;
  std::uint64_t seed = 1;
  bool degree_bounded = false, exact_terminals = false, literal = false, no_timing = false;
  double alpha = std::log(4.0);

  auto* solve = app.add_subcommand("solve", "Run an approximation algorithm on an instance");
  solve->add_option("--in", in, "Instance JSON")->required();
  solve->add_option("--out", out, "Write the result here instead of stdout");
  solve->add_option("--alg", alg, "leaf2leaf | relgreedy | sfcover")
      ->check(CLI::IsMember({"leaf2leaf", "relgreedy", "sfcover"}));
  solve->add_option("--k", k, "Seed-set scale for relgreedy")->check(CLI::PositiveNumber);
  solve->add_flag("--degree-bounded", degree_bounded, "Use the instance's degree bounds");
  solve->add_flag("--exact-terminals", exact_terminals, "Optimal terminal cover (small inputs)");
  solve->add_flag("--literal", literal, "sfcover without re-minimalizing after splits");

  auto* verify = app.add_subcommand("verify", "Check a solution with two independent tests");
  verify->add_option("--in", in, "Instance JSON")->required();
  verify->add_option("--solution", solution, "Solution JSON")->required();
  verify->add_option("--out", out, "Write the verdict here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Compute an optimum by exact search");
  oracle->add_option("--in", in, "Instance JSON")->required();
  oracle->add_option("--out", out, "Write the result here instead of stdout");
  oracle->add_option("--opt-guard", guard, "Largest link count to search");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind, "Generator kind")->required();
  gen->add_option("--n", n, "Nodes, terminals or ground size");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Write the instance here instead of stdout");

  auto* bench = app.add_subcommand("bench", "Run generator suites and ratio tables");
  bench->add_option("--in", config, "Bench config JSON")->required();
  bench->add_option("--out", out, "Directory for bench.csv and bench.json");
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)");
  auto* bench_guard = bench->add_option("--opt-guard", guard, "Largest link count for exact optimum");
  bench->add_flag("--no-timing", no_timing, "Omit runtimes for byte-stable output");

  auto* ratio = app.add_subcommand("ratio", "Solve the combined-ratio equation");
  ratio->add_option("--alpha", alpha, "Leaf-to-leaf ratio in (1, 2); default ln 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) {
      aug::SolveOptions opt;
      opt.alg = alg;
      opt.k = k;
      opt.degree_bounded = degree_bounded;
      opt.exact_terminals = exact_terminals;
      opt.literal = literal;
      return cmd_solve(in, out, opt);
    }
    if (*verify) return cmd_verify(in, solution, out);
    if (*oracle) return cmd_oracle(in, out, guard);
    if (*gen) {
      emit(aug::instance_to_json(aug::generate(kind, n, seed)), out);
      return kOk;
    }
    if (*bench) {
      return cmd_bench(config, out, threads,
                       bench_guard->count() > 0 ? std::optional(guard) : std::nullopt, no_timing);
    }
    if (*ratio) {
      const aug::CombinedRatio r = aug::combined_ratio(alpha);
      emit({{"alpha", alpha}, {"x", r.x}, {"ratio", r.ratio}}, out);
      return kOk;
    }
  } catch (const aug::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const aug::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const aug::StructureError& e) {
    std::cerr << "malformed structure: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
