#include "aug/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "aug/generate.hpp"
#include "aug/solve.hpp"

namespace aug {

using nlohmann::json;

BenchConfig bench_config_from_json(const json& j) {
  BenchConfig c;
  try {
    c.seed = j.value("seed", c.seed);
    c.opt_guard = j.value("opt_guard", c.opt_guard);
    c.threads = j.value("threads", c.threads);
    c.timing = j.value("timing", c.timing);
    c.triage_dir = j.value("triage_dir", c.triage_dir);
    for (const json& s : j.at("suites")) {
      BenchSuite suite;
      suite.kind = s.at("kind").get<std::string>();
      suite.name = s.value("name", suite.kind);
      suite.alg = s.value("alg", std::string());
      suite.n = s.value("n", suite.n);
      suite.count = s.value("count", suite.count);
      suite.degree_bounded = s.value("degree_bounded", false);
      suite.k = s.value("k", suite.k);
      c.suites.push_back(std::move(suite));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed bench config: ") + e.what());
  }
  return c;
}

namespace {

double ceiling_for(const std::string& alg, bool degree_bounded) {
  if (degree_bounded) return 0;  // compared against the unbounded optimum only for reporting
  if (alg == "leaf2leaf") return 5.0 / 3.0;
  if (alg == "sfcover") return 1.5;
  return 2.0;
}

void attach_bounds(Instance& inst, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  if (auto* e = std::get_if<ElemConnInstance>(&inst)) {
    ElemConnFunction p(*e);
    e->bounds = random_feasible_bounds(p, rng);
  } else if (auto* s = std::get_if<SetFunctionInstance>(&inst)) {
    s->bounds = random_feasible_bounds(*s->function(), rng);
  } else {
    throw std::invalid_argument("degree bounds apply to set-function suites only");
  }
}

BenchRow run_one(const BenchConfig& config, const BenchSuite& suite, std::size_t index,
                 std::uint64_t seed) {
  BenchRow row;
  char id[64];
  std::snprintf(id, sizeof id, "%s-%05zu", suite.name.c_str(), index);
  row.id = id;
  row.suite = suite.name;
  row.kind = suite.kind;
  row.seed = seed;
  Instance inst;
  try {
    inst = generate(suite.kind, suite.n, seed);
    if (suite.degree_bounded) attach_bounds(inst, seed);
    SolveOptions opt;
    opt.alg = suite.alg;
    opt.k = suite.k;
    opt.degree_bounded = suite.degree_bounded;
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome out = solve(inst, opt);
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.alg = out.alg;
    row.size = out.edges.size();

    const Verdict v = verify(inst, out.edges);
    if (!v.feasible || !v.agree) {
      row.ok = false;
      row.note = "verification failed";
    }
    if (!out.certificates_ok) {
      row.ok = false;
      row.note = "per-run certificate violated";
    }
    if (out.report.contains("lower_bounds")) {
      for (const json& b : out.report.at("lower_bounds")) {
        row.lower_bound = std::max(row.lower_bound, b.get<std::size_t>());
      }
    }
    if (out.report.contains("max_degree_violation")) {
      row.degree_violation = out.report.at("max_degree_violation").get<int>();
    }
    const auto* fam = std::get_if<FamilyInstance>(&inst);
    if (!fam || fam->links.size() <= config.opt_guard) row.opt = optimum_size(inst, config.opt_guard);
    if (row.opt) {
      if (*row.opt > 0) row.ratio = static_cast<double>(row.size) / static_cast<double>(*row.opt);
      if (!suite.degree_bounded && row.lower_bound > *row.opt) {
        row.ok = false;
        row.note = "lower bound exceeds optimum";
      }
      const double ceiling = ceiling_for(row.alg, suite.degree_bounded);
      if (ceiling > 0 && row.ratio > ceiling + 1e-12) {
        row.ok = false;
        row.note = "ratio above ceiling";
      }
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.note = std::string("error: ") + e.what();
  }
  if (!row.ok && !config.triage_dir.empty()) {
    try {
      std::filesystem::create_directories(config.triage_dir);
      write_json_file(config.triage_dir + "/" + row.id + ".json", instance_to_json(inst));
    } catch (const std::exception&) {
      row.note += " (triage write failed)";
    }
  }
  return row;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  struct Job {
    const BenchSuite* suite;
    std::size_t index;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < config.suites.size(); ++s) {
    for (std::size_t i = 0; i < config.suites[s].count; ++i) {
      jobs.push_back({&config.suites[s], i, config.seed * 1000003ULL + s * 100003ULL + i});
    }
  }
  BenchReport report;
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      report.rows[j] = run_one(config, *jobs[j].suite, jobs[j].index, jobs[j].seed);
    }
  };
  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(report.rows.begin(), report.rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return a.id < b.id; });
  double sum = 0;
  std::size_t counted = 0;
  for (const BenchRow& r : report.rows) {
    if (!r.ok) ++report.violations;
    if (r.ratio > 0) {
      report.max_ratio = std::max(report.max_ratio, r.ratio);
      sum += r.ratio;
      ++counted;
    }
  }
  report.mean_ratio = counted == 0 ? 0 : sum / static_cast<double>(counted);
  return report;
}

std::string bench_csv(const BenchReport& report, bool timing) {
  std::ostringstream out;
  out << "id,suite,kind,alg,seed,size,opt,ratio,lower_bound,degree_violation";
  if (timing) out << ",runtime_ms";
  out << ",ok,note\n";
  for (const BenchRow& r : report.rows) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    out << r.id << ',' << r.suite << ',' << r.kind << ',' << r.alg << ',' << r.seed << ','
        << r.size << ',' << (r.opt ? std::to_string(*r.opt) : "") << ',' << ratio << ','
        << r.lower_bound << ',' << r.degree_violation;
    if (timing) {
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", r.runtime_ms);
      out << ',' << ms;
    }
    std::string note = r.note;
    std::replace(note.begin(), note.end(), ',', ';');
    out << ',' << (r.ok ? 1 : 0) << ',' << note << '\n';
  }
  return out.str();
}

json bench_json(const BenchReport& report, bool timing) {
  json rows = json::array();
  for (const BenchRow& r : report.rows) {
    json row = {{"id", r.id},       {"suite", r.suite}, {"kind", r.kind},
                {"alg", r.alg},     {"seed", r.seed},   {"size", r.size},
                {"ratio", r.ratio}, {"lower_bound", r.lower_bound},
                {"degree_violation", r.degree_violation},
                {"ok", r.ok},       {"note", r.note}};
    row["opt"] = r.opt ? json(*r.opt) : json(nullptr);
    if (timing) row["runtime_ms"] = r.runtime_ms;
    rows.push_back(std::move(row));
  }
  return {{"rows", rows},
          {"max_ratio", report.max_ratio},
          {"mean_ratio", report.mean_ratio},
          {"violations", report.violations}};
}

}  // namespace aug
