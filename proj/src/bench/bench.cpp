#include "cgraph/bench/bench.hpp"

#include <atomic>
#include <chrono>
#include <latch>
#include <stdexcept>
#include <thread>

namespace cgraph::bench {
namespace {

using Clock = std::chrono::steady_clock;

struct alignas(64) WorkerCounts {
  std::array<std::uint64_t, 6> per_method{};
};

}  // namespace

void validate(const BenchConfig& cfg) {
  validate(cfg.workload.spec);
  if (cfg.threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (!(cfg.duration_s > 0.0)) throw std::invalid_argument("duration must be positive");
  if (cfg.key_range < 1) throw std::invalid_argument("key range must be at least 1");
  if (cfg.initial_vertices > cfg.key_range) {
    throw std::invalid_argument("initial vertices (" + std::to_string(cfg.initial_vertices) +
                                ") exceed the key range (" + std::to_string(cfg.key_range) + ")");
  }
  if (cfg.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  if (cfg.acyclic && cfg.backend != BackendKind::Lazy) {
    throw std::invalid_argument("the acyclic variant is only available with the lazy backend");
  }
  if (cfg.acyclic && cfg.die) {
    throw std::invalid_argument("--die is not supported by the acyclic variant");
  }
}

std::unique_ptr<GraphInterface> make_bench_graph(const BenchConfig& cfg) {
  if (cfg.acyclic) return make_acyclic_graph();
  GraphOptions options;
  options.remove_incoming_edges = cfg.die;
  return make_graph(cfg.backend, options);
}

void prepopulate(GraphInterface& g, unsigned initial_vertices) {
  const Key n = initial_vertices;
  for (Key u = 1; u <= n; ++u) g.add_vertex(u);
  for (Key u = 1; u <= n; ++u) {
    for (Key v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (g.acyclic() && v < u) continue;
      g.add_edge(u, v);
    }
  }
}

BenchResult run_once(const BenchConfig& cfg, unsigned repeat, const RunHooks& hooks) {
  auto graph = make_bench_graph(cfg);
  prepopulate(*graph, cfg.initial_vertices);

  const std::uint64_t run_seed = derive_seed(cfg.seed, repeat);
  std::vector<WorkerCounts> counts(cfg.threads);
  std::atomic<bool> stop{false};
  std::atomic<bool> pause{false};
  std::atomic<unsigned> parked{0};
  std::atomic<std::uint64_t> epoch{0};
  std::latch ready(static_cast<std::ptrdiff_t>(cfg.threads) + 1);

  std::vector<std::jthread> workers;
  workers.reserve(cfg.threads);
  for (unsigned t = 0; t < cfg.threads; ++t) {
    workers.emplace_back([&, t] {
      OpSampler sampler(cfg.workload.spec, cfg.key_range, derive_seed(run_seed, t));
      auto& mine = counts[t].per_method;
      ready.arrive_and_wait();
      while (!stop.load(std::memory_order_relaxed)) {
        const std::uint64_t e = epoch.load(std::memory_order_acquire);
        if (pause.load(std::memory_order_acquire)) {
          parked.fetch_add(1, std::memory_order_acq_rel);
          parked.notify_all();
          epoch.wait(e, std::memory_order_acquire);
          continue;
        }
        const Op op = sampler.next();
        graph->apply(op);
        ++mine[workload_index(op.method)];
      }
    });
  }

  ready.arrive_and_wait();
  const auto start = Clock::now();
  const auto duration = std::chrono::duration<double>(cfg.duration_s);
  Clock::duration paused{};
  for (unsigned c = 0; c < hooks.checkpoints; ++c) {
    std::this_thread::sleep_until(
        start + paused +
        std::chrono::duration_cast<Clock::duration>(duration * (c + 1) / (hooks.checkpoints + 1)));
    const auto pause_start = Clock::now();
    pause.store(true, std::memory_order_release);
    for (unsigned p = parked.load(std::memory_order_acquire); p < cfg.threads;
         p = parked.load(std::memory_order_acquire)) {
      parked.wait(p, std::memory_order_acquire);
    }
    if (hooks.at_checkpoint) hooks.at_checkpoint(*graph, c);
    parked.store(0, std::memory_order_release);
    pause.store(false, std::memory_order_release);
    epoch.fetch_add(1, std::memory_order_acq_rel);
    epoch.notify_all();
    paused += Clock::now() - pause_start;
  }
  std::this_thread::sleep_until(start + paused + std::chrono::duration_cast<Clock::duration>(duration));
  stop.store(true, std::memory_order_relaxed);
  for (auto& w : workers) w.join();
  const auto elapsed = Clock::now() - start - paused;

  BenchResult r;
  r.config = cfg;
  r.repeat = repeat;
  for (const auto& c : counts) {
    for (std::size_t i = 0; i < 6; ++i) r.per_method[i] += c.per_method[i];
  }
  for (std::uint64_t n : r.per_method) r.total_ops += n;
  r.elapsed_s = std::chrono::duration<double>(elapsed).count();
  r.throughput = r.elapsed_s > 0 ? static_cast<double>(r.total_ops) / r.elapsed_s : 0.0;
  r.well_formed = graph->well_formed();
  if (hooks.at_end) hooks.at_end(*graph);
  return r;
}

BenchSummary run_bench(const BenchConfig& cfg) {
  validate(cfg);
  BenchSummary s;
  for (unsigned i = 0; i < cfg.repeats; ++i) s.repeats.push_back(run_once(cfg, i));
  for (const auto& r : s.repeats) {
    s.mean_throughput += r.throughput;
    s.mean_total_ops += static_cast<double>(r.total_ops);
  }
  s.mean_throughput /= cfg.repeats;
  s.mean_total_ops /= cfg.repeats;
  return s;
}

}  // namespace cgraph::bench
