// Throughput benchmark for the concurrent graph backends.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cgraph/bench/bench.hpp"
#include "cgraph/bench/csv.hpp"
#include "cgraph/lincheck/checker.hpp"
#include "cgraph/lincheck/harness.hpp"

namespace {

using namespace cgraph;

int record_session(const bench::BenchConfig& cfg, const std::string& path) {
  auto graph = bench::make_bench_graph(cfg);
  const Key n = std::min<Key>(cfg.initial_vertices, 4);
  std::vector<Op> setup;
  for (Key u = 1; u <= n; ++u) setup.push_back(Op{Method::AddVertex, u, 0});
  for (Key u = 1; u <= n; ++u) {
    for (Key v = 1; v <= n; ++v) {
      if (u != v && !(cfg.acyclic && v < u)) setup.push_back(Op{Method::AddEdge, u, v});
    }
  }
  lin::HarnessConfig h;
  h.threads = cfg.threads;
  h.ops_per_thread = std::max<std::size_t>(1, 12 / cfg.threads);
  h.key_range = cfg.key_range;
  h.mix = cfg.workload.spec;
  h.seed = cfg.seed;
  const lin::History history = lin::record_history(*graph, setup, h);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  lin::write_history(out, history);
  out.close();

  const auto result = lin::check_linearizable(history, graph->oracle_kind());
  std::cout << "recorded " << history.events.size() << " events to " << path << "\n"
            << "verdict: " << lin::to_string(result.verdict) << " (" << result.states
            << " states)\n";
  return result.linearizable() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrent graph throughput benchmark"};
  bench::BenchConfig cfg;
  std::string backend = "lazy";
  std::string workload = "update";
  std::string csv_path;
  std::string history_path;

  app.add_option("--backend", backend, "coarse|hoh|lazy|lockfree")->capture_default_str();
  app.add_option("--workload", workload, "update|contains|edges|custom:a,b,c,d,e,f")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  app.add_option("--duration", cfg.duration_s, "Seconds per repeat")->capture_default_str();
  app.add_option("--initial-vertices", cfg.initial_vertices, "Vertices of the initial complete graph")
      ->capture_default_str();
  app.add_option("--key-range", cfg.key_range, "Keys are drawn from [1, N]")->capture_default_str();
  app.add_flag("--die", cfg.die, "Delete incoming edges on vertex removal");
  app.add_flag("--acyclic", cfg.acyclic, "Use the acyclicity-preserving variant");
  app.add_option("--seed", cfg.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--repeats", cfg.repeats, "Runs to average")->capture_default_str();
  app.add_option("--csv", csv_path, "Write one CSV row per repeat");
  app.add_option("--record-history", history_path,
                 "Record a short concurrent session to PATH and check it");
  CLI11_PARSE(app, argc, argv);

  try {
    auto kind = parse_backend(backend);
    if (!kind) throw std::invalid_argument("unknown backend '" + backend + "'");
    cfg.backend = *kind;
    cfg.workload = bench::parse_workload(workload);
    bench::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!history_path.empty()) return record_session(cfg, history_path);

  const bench::BenchSummary summary = bench::run_bench(cfg);
  bool all_well_formed = true;
  for (const auto& r : summary.repeats) {
    std::printf("%s %s threads=%u repeat=%u total_ops=%llu elapsed_s=%.3f throughput=%.1f ops/s%s\n",
                backend.c_str(), cfg.workload.name.c_str(), cfg.threads, r.repeat,
                static_cast<unsigned long long>(r.total_ops), r.elapsed_s, r.throughput,
                r.well_formed ? "" : " MALFORMED");
    all_well_formed = all_well_formed && r.well_formed;
  }
  std::printf("mean throughput=%.1f ops/s over %u repeats\n", summary.mean_throughput, cfg.repeats);

  if (!csv_path.empty()) {
    try {
      bench::emit_csv(summary.repeats, csv_path);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return all_well_formed ? 0 : 3;
}
