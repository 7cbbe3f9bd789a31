#pragma once

#include <cstdint>
#include <functional>
#include <latch>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "cgraph/bench/workload.hpp"
#include "cgraph/graph_interface.hpp"
#include "cgraph/instrument.hpp"
#include "cgraph/lincheck/recorder.hpp"

namespace cgraph::lin {

/// Yields the calling thread at scheduling points with a fixed probability,
/// and always on a failed try_lock or a retry.
class RandomYieldHook final : public sched::YieldHook {
 public:
  RandomYieldHook(double probability, std::uint64_t seed) : probability_(probability), seed_(seed) {}

  void on_point(sched::Site site) override;

 private:
  double probability_;
  std::uint64_t seed_;
};

struct HarnessConfig {
  std::size_t threads = 3;
  std::size_t ops_per_thread = 4;
  Key key_range = 6;
  bench::WorkloadSpec mix = bench::WorkloadSpec::mixed();
  double yield_probability = 0.3;
  std::uint64_t seed = 1;
};

/// Produces the k-th op of worker `thread` (1-based).
using OpSource = std::function<Op(std::uint32_t thread, std::size_t k, std::mt19937_64& rng)>;

/// Runs `setup` as thread 0, then `cfg.threads` workers concurrently, each
/// recording `cfg.ops_per_thread` ops through `apply`. Random yields are
/// injected while the workers run.
History record_concurrent(const std::function<bool(const Op&)>& apply, std::span<const Op> setup,
                          const OpSource& source, const HarnessConfig& cfg);

/// Random vertex and edge insertions over [1, key_range].
std::vector<Op> random_setup(Key key_range, std::size_t vertices, std::size_t edges,
                             std::uint64_t seed);

/// A recorded run over `graph` with ops drawn from `cfg.mix`. Method names
/// follow the graph's family (Acyclic* for the acyclic variant).
History record_history(GraphInterface& graph, std::span<const Op> setup, const HarnessConfig& cfg);

}  // namespace cgraph::lin
