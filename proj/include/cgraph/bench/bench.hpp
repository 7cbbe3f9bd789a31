#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cgraph/backends/common.hpp"
#include "cgraph/bench/workload.hpp"
#include "cgraph/graph_interface.hpp"

namespace cgraph::bench {

struct BenchConfig {
  BackendKind backend = BackendKind::Lazy;
  NamedWorkload workload{"update", WorkloadSpec::update_dominated()};
  unsigned threads = 1;
  double duration_s = 2.0;
  unsigned initial_vertices = 32;
  Key key_range = 64;
  bool die = false;
  bool acyclic = false;
  std::uint64_t seed = 42;
  unsigned repeats = 3;
};

struct BenchResult {
  BenchConfig config;
  unsigned repeat = 0;
  std::uint64_t total_ops = 0;
  double elapsed_s = 0.0;
  double throughput = 0.0;  // total_ops / elapsed_s
  std::array<std::uint64_t, 6> per_method{};  // kWorkloadMethods order
  bool well_formed = false;  // post-run quiescent check
};

struct BenchSummary {
  std::vector<BenchResult> repeats;
  double mean_throughput = 0.0;
  double mean_total_ops = 0.0;
};

/// Optional observation points for a run.
struct RunHooks {
  /// Number of pauses at evenly spaced instants of the run.
  unsigned checkpoints = 0;
  /// Called at each checkpoint while every worker is parked.
  std::function<void(const GraphInterface&, unsigned index)> at_checkpoint;
  /// Called once after the workers have joined.
  std::function<void(const GraphInterface&)> at_end;
};

/// Throws std::invalid_argument describing the first invalid field.
void validate(const BenchConfig& cfg);

/// Empty graph of the configured kind.
std::unique_ptr<GraphInterface> make_bench_graph(const BenchConfig& cfg);

/// Vertices 1..n with every ordered pair as an edge, or only i<j pairs for
/// the acyclic variant.
void prepopulate(GraphInterface& g, unsigned initial_vertices);

/// One timed run on a freshly pre-populated graph. Time spent parked at
/// checkpoints is excluded from elapsed_s.
BenchResult run_once(const BenchConfig& cfg, unsigned repeat, const RunHooks& hooks = {});

/// Validates, then runs cfg.repeats times and averages.
BenchSummary run_bench(const BenchConfig& cfg);

}  // namespace cgraph::bench
