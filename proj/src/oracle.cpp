#include "cgraph/oracle.hpp"

#include <stdexcept>
#include <string>

namespace cgraph {

std::string_view to_string(OracleKind k) noexcept {
  switch (k) {
    case OracleKind::Graph: return "graph";
    case OracleKind::AcyclicGraph: return "acyclic";
    case OracleKind::Set: return "set";
  }
  return "?";
}

bool accepts(OracleKind kind, Method m) noexcept {
  switch (m) {
    case Method::AddVertex:
    case Method::RemoveVertex:
    case Method::ContainsVertex:
      return kind != OracleKind::Set;
    case Method::AddEdge:
    case Method::RemoveEdge:
    case Method::ContainsEdge:
      return kind == OracleKind::Graph;
    case Method::AcyclicAddEdge:
    case Method::AcyclicRemoveEdge:
    case Method::AcyclicContainsEdge:
      return kind == OracleKind::AcyclicGraph;
    case Method::SetAdd:
    case Method::SetRemove:
    case Method::SetContains:
      return kind == OracleKind::Set;
  }
  return false;
}

bool SeqGraphOracle::add_edge_acyclic(Key u, Key v) {
  if (!state_.has_vertex(u) || !state_.has_vertex(v)) return false;
  if (state_.has_edge(u, v)) return true;
  state_.edges.insert({u, v});
  if (!is_acyclic(state_.edges)) {
    state_.edges.erase({u, v});
    return false;
  }
  return true;
}

bool SeqGraphOracle::apply(const Op& op) {
  if (!accepts(kind_, op.method)) {
    throw std::invalid_argument(std::string(method_name(op.method)) + " is not a " +
                                std::string(to_string(kind_)) + " method");
  }
  auto& V = state_.vertices;
  auto& E = state_.edges;
  const Key u = op.u;
  const Key v = op.v;
  const bool both = V.contains(u) && V.contains(v);
  switch (op.method) {
    case Method::AddVertex:
      V.insert(u);
      return true;
    case Method::RemoveVertex: {
      if (V.erase(u) == 0) return false;
      std::erase_if(E, [u](const Edge& e) { return e.first == u || e.second == u; });
      return true;
    }
    case Method::ContainsVertex:
      return V.contains(u);
    case Method::AddEdge:
      if (!both) return false;
      E.insert({u, v});
      return true;
    case Method::AcyclicAddEdge:
      return add_edge_acyclic(u, v);
    case Method::RemoveEdge:
    case Method::AcyclicRemoveEdge:
      if (!both) return false;
      E.erase({u, v});
      return true;
    case Method::ContainsEdge:
    case Method::AcyclicContainsEdge:
      return both && E.contains({u, v});
    case Method::SetAdd:
      return V.insert(u).second;
    case Method::SetRemove:
      return V.erase(u) == 1;
    case Method::SetContains:
      return V.contains(u);
  }
  return false;
}

}  // namespace cgraph
