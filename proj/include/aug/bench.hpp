#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace aug {

struct BenchSuite {
  std::string name;
  std::string kind;             // a generator kind
  std::string alg;              // empty picks the default for the instance
  std::size_t n = 6;
  std::size_t count = 10;
  bool degree_bounded = false;  // attach random feasible bounds
  std::size_t k = 2;
};

struct BenchConfig {
  std::vector<BenchSuite> suites;
  std::uint64_t seed = 1;
  std::size_t opt_guard = 12;   // largest link count for which OPT is computed
  std::size_t threads = 0;      // 0 = hardware concurrency
  bool timing = true;           // include runtimes in the tables
  std::string triage_dir;       // offending instances are written here
};

/// {"seed":..,"opt_guard":..,"threads":..,"suites":[{"name","kind","alg","n","count",
/// "degree_bounded","k"}]}
BenchConfig bench_config_from_json(const nlohmann::json& j);

struct BenchRow {
  std::string id;
  std::string suite;
  std::string kind;
  std::string alg;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::optional<std::size_t> opt;
  double ratio = 0;             // size / opt, 0 when opt is unknown or zero
  std::size_t lower_bound = 0;  // best certified lower bound from the run
  int degree_violation = 0;
  double runtime_ms = 0;
  bool ok = true;
  std::string note;
};

struct BenchReport {
  std::vector<BenchRow> rows;   // sorted by id
  double max_ratio = 0;
  double mean_ratio = 0;
  std::size_t violations = 0;

  bool ok() const { return violations == 0; }
};

/// Ratio ceilings: leaf2leaf 5/3, sfcover 3/2, relgreedy 2; degree-bounded
/// runs must stay within b + 1.
BenchReport run_bench(const BenchConfig& config);

std::string bench_csv(const BenchReport& report, bool timing);
nlohmann::json bench_json(const BenchReport& report, bool timing);

}  // namespace aug
