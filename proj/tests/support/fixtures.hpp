#pragma once

// Deterministic synthetic histories for checker cross-validation. Each op
// takes effect at a random point inside its interval; some results are
// flipped so that both verdicts occur.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "cgraph/lincheck/history.hpp"
#include "cgraph/oracle.hpp"

namespace cgraph::testing {

inline std::vector<Method> methods_of(OracleKind kind) {
  switch (kind) {
    case OracleKind::Graph:
      return {Method::AddVertex, Method::RemoveVertex, Method::ContainsVertex,
              Method::AddEdge,   Method::RemoveEdge,   Method::ContainsEdge};
    case OracleKind::AcyclicGraph:
      return {Method::AddVertex,      Method::RemoveVertex,      Method::ContainsVertex,
              Method::AcyclicAddEdge, Method::AcyclicRemoveEdge, Method::AcyclicContainsEdge};
    case OracleKind::Set:
      return {Method::SetAdd, Method::SetRemove, Method::SetContains};
  }
  return {};
}

/// A history of at most `max_ops` ops by up to 3 threads over keys 1..keys.
inline lin::History synthetic_history(std::mt19937_64& rng, OracleKind kind, std::size_t max_ops = 6,
                                      Key keys = 3, double flip = 0.2) {
  const std::vector<Method> methods = methods_of(kind);
  std::uniform_int_distribution<std::size_t> n_ops(1, max_ops);
  std::uniform_int_distribution<std::uint32_t> n_threads(1, 3);
  std::uniform_int_distribution<std::size_t> pick_method(0, methods.size() - 1);
  std::uniform_int_distribution<Key> key(1, keys);
  std::bernoulli_distribution flip_coin(flip);

  const std::size_t n = n_ops(rng);
  const std::uint32_t threads = n_threads(rng);
  std::vector<std::vector<Op>> per_thread(threads);
  for (std::size_t i = 0; i < n; ++i) {
    const Method m = methods[pick_method(rng)];
    Op op{m, key(rng), arity(m) == 2 ? key(rng) : 0};
    per_thread[std::uniform_int_distribution<std::uint32_t>(0, threads - 1)(rng)].push_back(op);
  }

  // Each op goes through three steps: invoke, take effect, respond.
  SeqGraphOracle oracle(kind);
  std::vector<std::size_t> next(threads, 0);
  std::vector<int> stage(threads, 0);
  std::vector<bool> result(threads, false);
  lin::History h;
  std::uint64_t seq = 0;
  for (;;) {
    std::vector<std::uint32_t> ready;
    for (std::uint32_t t = 0; t < threads; ++t) {
      if (next[t] < per_thread[t].size()) ready.push_back(t);
    }
    if (ready.empty()) break;
    const std::uint32_t t = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
    const Op& op = per_thread[t][next[t]];
    if (stage[t] == 0) {
      h.events.push_back({seq++, t, lin::Phase::Inv, op, std::nullopt});
      stage[t] = 1;
    } else if (stage[t] == 1) {
      result[t] = oracle.apply(op) != flip_coin(rng);
      stage[t] = 2;
    } else {
      h.events.push_back({seq++, t, lin::Phase::Resp, op, result[t]});
      stage[t] = 0;
      ++next[t];
    }
  }
  return h;
}

/// The fixed cross-validation set: graph, acyclic and set histories in turn.
inline std::vector<std::pair<OracleKind, lin::History>> fixture_set(std::size_t count = 300,
                                                                    std::uint64_t seed = 2024) {
  constexpr std::array kinds{OracleKind::Graph, OracleKind::AcyclicGraph, OracleKind::Set};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<OracleKind, lin::History>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const OracleKind kind = kinds[i % kinds.size()];
    out.emplace_back(kind, synthetic_history(rng, kind));
  }
  return out;
}

}  // namespace cgraph::testing
