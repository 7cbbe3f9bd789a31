#pragma once

#include <memory>
#include <string>

#include "cgraph/abstract_graph.hpp"
#include "cgraph/backends/common.hpp"
#include "cgraph/graph.hpp"
#include "cgraph/op.hpp"
#include "cgraph/oracle.hpp"

namespace cgraph {

/// Runtime-polymorphic graph used by the benchmark and the checker harness.
/// For the acyclic variant the edge methods map to the acyclic ones.
class GraphInterface {
 public:
  virtual ~GraphInterface() = default;

  virtual bool add_vertex(Key u) = 0;
  virtual bool remove_vertex(Key u) = 0;
  virtual bool contains_vertex(Key u) const = 0;
  virtual bool add_edge(Key u, Key v) = 0;
  virtual bool remove_edge(Key u, Key v) = 0;
  virtual bool contains_edge(Key u, Key v) const = 0;

  virtual AbstractGraph snapshot() const = 0;
  virtual bool well_formed() const = 0;
  virtual bool acyclic() const noexcept = 0;
  virtual std::string name() const = 0;

  /// Runs `op`. Graph and Acyclic* edge methods are interchangeable here.
  bool apply(const Op& op);

  /// Sequential specification this graph follows.
  OracleKind oracle_kind() const noexcept {
    return acyclic() ? OracleKind::AcyclicGraph : OracleKind::Graph;
  }

  /// `m` rewritten to this graph's method family.
  Method history_method(Method m) const noexcept;
};

std::unique_ptr<GraphInterface> make_graph(BackendKind kind, GraphOptions options = {});
std::unique_ptr<GraphInterface> make_acyclic_graph();

}  // namespace cgraph
