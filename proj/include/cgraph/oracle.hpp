#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "cgraph/abstract_graph.hpp"
#include "cgraph/op.hpp"

namespace cgraph {

/// Which sequential specification a history or oracle follows.
enum class OracleKind : std::uint8_t { Graph, AcyclicGraph, Set };

std::string_view to_string(OracleKind k) noexcept;

/// Single-threaded reference implementation of the sequential specification.
///
/// Graph kind accepts the six graph methods. AcyclicGraph kind accepts the
/// vertex methods plus the Acyclic* edge methods. Set kind accepts Set* methods
/// and keeps the keys in `vertices`. Passing a method of another kind throws
/// std::invalid_argument.
class SeqGraphOracle {
 public:
  explicit SeqGraphOracle(OracleKind kind = OracleKind::Graph) : kind_(kind) {}
  SeqGraphOracle(OracleKind kind, AbstractGraph state) : kind_(kind), state_(std::move(state)) {}

  bool apply(const Op& op);

  const AbstractGraph& state() const noexcept { return state_; }
  OracleKind kind() const noexcept { return kind_; }

 private:
  bool add_edge_acyclic(Key u, Key v);

  OracleKind kind_;
  AbstractGraph state_;
};

/// True iff `m` belongs to the method family of `kind`.
bool accepts(OracleKind kind, Method m) noexcept;

}  // namespace cgraph
