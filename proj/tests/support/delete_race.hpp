#pragma once

// The vertex-delete race on add_edge(u, v): the adder passes its first
// contains(u), then u is removed and v is added before it continues.

#include <thread>

#include "cgraph/graph.hpp"
#include "cgraph/lincheck/recorder.hpp"
#include "gate_hook.hpp"

namespace cgraph::testing {

struct DeleteRaceRun {
  bool add_edge_result = false;
  lin::History history;
};

template <ListBackend B>
DeleteRaceRun run_delete_race(GraphOptions options, Key u = 1, Key v = 2) {
  Graph<B> g(options);
  lin::Recorder rec(4);
  rec.record(0, {Method::AddVertex, u, 0}, [&] { return g.add_vertex(u); });

  GateHook gate(sched::Site::EdgeOpSourceChecked);
  sched::ScopedHook hook(&gate);
  DeleteRaceRun run;
  std::thread adder([&] {
    gate.adopt_current_thread();
    run.add_edge_result = rec.record(1, {Method::AddEdge, u, v}, [&] { return g.add_edge(u, v); });
  });
  gate.wait_until_parked();
  rec.record(2, {Method::RemoveVertex, u, 0}, [&] { return g.remove_vertex(u); });
  rec.record(3, {Method::AddVertex, v, 0}, [&] { return g.add_vertex(v); });
  gate.release();
  adder.join();
  run.history = rec.merged();
  return run;
}

/// The fixed history of the race with AddEdge reported true.
inline lin::History delete_race_history(Key u = 1, Key v = 2) {
  using lin::Event;
  using lin::Phase;
  return lin::History{{
      Event{0, 0, Phase::Inv, {Method::AddVertex, u, 0}, std::nullopt},
      Event{1, 0, Phase::Resp, {Method::AddVertex, u, 0}, true},
      Event{2, 1, Phase::Inv, {Method::AddEdge, u, v}, std::nullopt},
      Event{3, 2, Phase::Inv, {Method::RemoveVertex, u, 0}, std::nullopt},
      Event{4, 2, Phase::Resp, {Method::RemoveVertex, u, 0}, true},
      Event{5, 3, Phase::Inv, {Method::AddVertex, v, 0}, std::nullopt},
      Event{6, 3, Phase::Resp, {Method::AddVertex, v, 0}, true},
      Event{7, 1, Phase::Resp, {Method::AddEdge, u, v}, true},
  }};
}

}  // namespace cgraph::testing
