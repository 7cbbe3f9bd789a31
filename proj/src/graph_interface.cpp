#include "cgraph/graph_interface.hpp"

#include <stdexcept>

#include "cgraph/acyclic_graph.hpp"

namespace cgraph {
namespace {

template <ListBackend B>
class GraphAdapter final : public GraphInterface {
 public:
  explicit GraphAdapter(GraphOptions options) : g_(options) {}

  bool add_vertex(Key u) override { return g_.add_vertex(u); }
  bool remove_vertex(Key u) override { return g_.remove_vertex(u); }
  bool contains_vertex(Key u) const override { return g_.contains_vertex(u); }
  bool add_edge(Key u, Key v) override { return g_.add_edge(u, v); }
  bool remove_edge(Key u, Key v) override { return g_.remove_edge(u, v); }
  bool contains_edge(Key u, Key v) const override { return g_.contains_edge(u, v); }

  AbstractGraph snapshot() const override { return g_.snapshot(); }
  bool well_formed() const override { return g_.well_formed(); }
  bool acyclic() const noexcept override { return false; }
  std::string name() const override { return std::string(to_string(B::kind)); }

 private:
  Graph<B> g_;
};

class AcyclicAdapter final : public GraphInterface {
 public:
  bool add_vertex(Key u) override { return g_.add_vertex(u); }
  bool remove_vertex(Key u) override { return g_.remove_vertex(u); }
  bool contains_vertex(Key u) const override { return g_.contains_vertex(u); }
  bool add_edge(Key u, Key v) override { return g_.acyclic_add_edge(u, v); }
  bool remove_edge(Key u, Key v) override { return g_.acyclic_remove_edge(u, v); }
  bool contains_edge(Key u, Key v) const override { return g_.acyclic_contains_edge(u, v); }

  AbstractGraph snapshot() const override { return g_.snapshot(); }
  bool well_formed() const override { return g_.well_formed(); }
  bool acyclic() const noexcept override { return true; }
  std::string name() const override { return "lazy-acyclic"; }

 private:
  AcyclicGraph g_;
};

}  // namespace

bool GraphInterface::apply(const Op& op) {
  switch (op.method) {
    case Method::AddVertex: return add_vertex(op.u);
    case Method::RemoveVertex: return remove_vertex(op.u);
    case Method::ContainsVertex: return contains_vertex(op.u);
    case Method::AddEdge:
    case Method::AcyclicAddEdge: return add_edge(op.u, op.v);
    case Method::RemoveEdge:
    case Method::AcyclicRemoveEdge: return remove_edge(op.u, op.v);
    case Method::ContainsEdge:
    case Method::AcyclicContainsEdge: return contains_edge(op.u, op.v);
    default:
      throw std::invalid_argument(std::string(method_name(op.method)) + " is not a graph method");
  }
}

Method GraphInterface::history_method(Method m) const noexcept {
  if (!acyclic()) return m;
  switch (m) {
    case Method::AddEdge: return Method::AcyclicAddEdge;
    case Method::RemoveEdge: return Method::AcyclicRemoveEdge;
    case Method::ContainsEdge: return Method::AcyclicContainsEdge;
    default: return m;
  }
}

std::unique_ptr<GraphInterface> make_graph(BackendKind kind, GraphOptions options) {
  switch (kind) {
    case BackendKind::Coarse: return std::make_unique<GraphAdapter<CoarseBackend>>(options);
    case BackendKind::Hoh: return std::make_unique<GraphAdapter<HohBackend>>(options);
    case BackendKind::Lazy: return std::make_unique<GraphAdapter<LazyBackend>>(options);
    case BackendKind::LockFree: return std::make_unique<GraphAdapter<LockFreeBackend>>(options);
  }
  throw std::invalid_argument("unknown backend");
}

std::unique_ptr<GraphInterface> make_acyclic_graph() { return std::make_unique<AcyclicAdapter>(); }

}  // namespace cgraph
