#pragma once

#include <compare>
#include <set>
#include <string>

#include "cgraph/key.hpp"

namespace cgraph {

/// Abstract (V, E) view of a graph: the reference state for oracles and snapshots.
struct AbstractGraph {
  std::set<Key> vertices;
  std::set<Edge> edges;

  bool has_vertex(Key k) const { return vertices.contains(k); }
  bool has_edge(Key u, Key v) const { return edges.contains({u, v}); }

  /// Every edge has both endpoints in `vertices`.
  bool closed() const;

  friend auto operator<=>(const AbstractGraph&, const AbstractGraph&) = default;
  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;
};

std::string to_string(const AbstractGraph& g);

/// True iff the directed graph given by `edges` has no cycle (self-loops count).
bool is_acyclic(const std::set<Edge>& edges);

/// True iff `to` is reachable from `from` by one or more edges.
bool has_path(const std::set<Edge>& edges, Key from, Key to);

}  // namespace cgraph
