#include "cgraph/lincheck/harness.hpp"

#include <functional>

namespace cgraph::lin {

void RandomYieldHook::on_point(sched::Site site) {
  thread_local std::minstd_rand rng(static_cast<std::uint32_t>(
      bench::derive_seed(seed_, std::hash<std::thread::id>{}(std::this_thread::get_id()))));
  if (site == sched::Site::LockSpin || site == sched::Site::Retry) {
    std::this_thread::yield();
    return;
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < probability_) std::this_thread::yield();
}

History record_concurrent(const std::function<bool(const Op&)>& apply, std::span<const Op> setup,
                          const OpSource& source, const HarnessConfig& cfg) {
  Recorder rec(cfg.threads + 1);
  for (const Op& op : setup) rec.record(0, op, [&] { return apply(op); });

  RandomYieldHook hook(cfg.yield_probability, cfg.seed);
  sched::ScopedHook scoped(cfg.yield_probability > 0 ? &hook : nullptr);
  std::latch start(static_cast<std::ptrdiff_t>(cfg.threads));
  {
    std::vector<std::jthread> workers;
    workers.reserve(cfg.threads);
    for (std::uint32_t t = 1; t <= cfg.threads; ++t) {
      workers.emplace_back([&, t] {
        std::mt19937_64 rng(bench::derive_seed(cfg.seed, t));
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        start.arrive_and_wait();
        for (std::size_t k = 0; k < cfg.ops_per_thread; ++k) {
          const Op op = source(t, k, rng);
          if (coin(rng) < cfg.yield_probability) std::this_thread::yield();
          rec.record(t, op, [&] { return apply(op); });
        }
      });
    }
  }
  return rec.merged();
}

std::vector<Op> random_setup(Key key_range, std::size_t vertices, std::size_t edges,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Key> key(1, key_range);
  std::vector<Op> out;
  for (std::size_t i = 0; i < vertices; ++i) out.push_back(Op{Method::AddVertex, key(rng), 0});
  for (std::size_t i = 0; i < edges; ++i) out.push_back(Op{Method::AddEdge, key(rng), key(rng)});
  return out;
}

History record_history(GraphInterface& graph, std::span<const Op> setup, const HarnessConfig& cfg) {
  std::vector<Op> named(setup.begin(), setup.end());
  for (Op& op : named) op.method = graph.history_method(op.method);
  const auto apply = [&graph](const Op& op) { return graph.apply(op); };
  const OpSource source = [&cfg, &graph](std::uint32_t, std::size_t, std::mt19937_64& rng) {
    Op op = bench::sample_op(cfg.mix, cfg.key_range, rng);
    op.method = graph.history_method(op.method);
    return op;
  };
  return record_concurrent(apply, named, source, cfg);
}

}  // namespace cgraph::lin
