#pragma once

#include <vector>

#include "cgraph/abstract_graph.hpp"
#include "cgraph/backends/coarse.hpp"
#include "cgraph/backends/common.hpp"
#include "cgraph/backends/hoh.hpp"
#include "cgraph/backends/lazy.hpp"
#include "cgraph/backends/lockfree.hpp"

namespace cgraph {

struct GraphOptions {
  /// Sweep every edge list for edges into a removed vertex.
  bool remove_incoming_edges = false;
  /// Test-only. When false, add_edge and remove_edge skip their second
  /// contains(u); this reintroduces a known linearizability bug.
  bool recheck_source = true;
};

/// Directed graph as a list of lists over a list backend.
template <ListBackend B>
class Graph {
 public:
  using Backend = B;
  using Node = typename B::Node;

  explicit Graph(GraphOptions options = {})
      : options_(options), head_(backend_.template make_list<Link::Vertex>()) {}

  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  /// Always true; a duplicate key leaves the graph unchanged.
  bool add_vertex(Key u) {
    require_user_key(u);
    backend_.template add<Link::Vertex>(head_, u, nullptr);
    return true;
  }

  bool remove_vertex(Key u) {
    require_user_key(u);
    const bool removed = backend_.template remove<Link::Vertex>(head_, u);
    if (removed && options_.remove_incoming_edges) remove_incoming_edges(u);
    return removed;
  }

  /// Removes edge nodes keyed `u` from every edge list. Not atomic with
  /// the vertex removal.
  void remove_incoming_edges(Key u) {
    require_user_key(u);
    for (Node* n = B::template next_node<Link::Vertex>(head_); n->val != kSentinelMax;
         n = B::template next_node<Link::Vertex>(n)) {
      backend_.template remove<Link::Edge>(B::edge_head(n), u);
    }
  }

  bool contains_vertex(Key u) const {
    require_user_key(u);
    return find_vertex(u) != nullptr;
  }

  bool add_edge(Key u, Key v) {
    require_user_key(u);
    require_user_key(v);
    auto [src, dst] = endpoints_for_update(u, v);
    if (src == nullptr) return false;
    backend_.template add<Link::Edge>(B::edge_head(src), v, dst);
    return true;
  }

  /// True whenever both vertices are present, even if the edge was not.
  bool remove_edge(Key u, Key v) {
    require_user_key(u);
    require_user_key(v);
    auto [src, dst] = endpoints_for_update(u, v);
    if (src == nullptr) return false;
    backend_.template remove<Link::Edge>(B::edge_head(src), v);
    return true;
  }

  bool contains_edge(Key u, Key v) const {
    require_user_key(u);
    require_user_key(v);
    Node* src = find_vertex(u);
    if (src == nullptr) return false;
    if (find_vertex(v) == nullptr) return false;
    return backend_.template contains<Link::Edge>(B::edge_head(src), v) != nullptr;
  }

  /// Abstract view. Only meaningful at a quiescent point.
  AbstractGraph snapshot() const {
    AbstractGraph g;
    std::vector<Node*> live;
    for (Node* n = first_vertex(); n->val != kSentinelMax; n = B::template next_node<Link::Vertex>(n)) {
      if (!B::template is_marked<Link::Vertex>(n)) {
        g.vertices.insert(n->val);
        live.push_back(n);
      }
    }
    for (Node* n : live) {
      for (Node* e = B::template next_node<Link::Edge>(B::edge_head(n)); e->val != kSentinelMax;
           e = B::template next_node<Link::Edge>(e)) {
        if (!B::template is_marked<Link::Edge>(e) && B::is_live(e) && g.vertices.contains(e->val)) {
          g.edges.insert({n->val, e->val});
        }
      }
    }
    return g;
  }

  /// Sentinels in place and keys strictly increasing in every list.
  /// Only meaningful at a quiescent point.
  bool well_formed() const {
    if (head_->val != kSentinelMin) return false;
    Key prev = kSentinelMin;
    Node* n = B::template next_node<Link::Vertex>(head_);
    for (; n != nullptr && n->val != kSentinelMax; n = B::template next_node<Link::Vertex>(n)) {
      if (n->val <= prev) return false;
      prev = n->val;
      if (!edge_list_well_formed(B::edge_head(n))) return false;
    }
    return n != nullptr && B::template next_node<Link::Vertex>(n) == nullptr;
  }

  Node* vertex_head() const noexcept { return head_; }
  B& backend() noexcept { return backend_; }
  const GraphOptions& options() const noexcept { return options_; }

 private:
  Node* first_vertex() const { return B::template next_node<Link::Vertex>(head_); }

  Node* find_vertex(Key u) const { return backend_.template contains<Link::Vertex>(head_, u); }

  struct Endpoints {
    Node* src = nullptr;
    Node* dst = nullptr;
  };

  // contains(u), contains(v), then contains(u) again. src is null on failure.
  Endpoints endpoints_for_update(Key u, Key v) {
    Node* src = find_vertex(u);
    if (src == nullptr) return {};
    sched::point(sched::Site::EdgeOpSourceChecked);
    Node* dst = find_vertex(v);
    if (dst == nullptr) return {};
    if (options_.recheck_source) {
      src = find_vertex(u);
      if (src == nullptr) return {};
    }
    return {src, dst};
  }

  static bool edge_list_well_formed(Node* head) {
    if (head == nullptr || head->val != kSentinelMin) return false;
    if (B::template is_marked<Link::Edge>(head)) return false;
    Key prev = kSentinelMin;
    Node* e = B::template next_node<Link::Edge>(head);
    for (; e != nullptr && e->val != kSentinelMax; e = B::template next_node<Link::Edge>(e)) {
      if (e->val <= prev) return false;
      prev = e->val;
    }
    return e != nullptr && B::template next_node<Link::Edge>(e) == nullptr;
  }

  GraphOptions options_;
  mutable B backend_;
  Node* head_;
};

using CoarseGraph = Graph<CoarseBackend>;
using HohGraph = Graph<HohBackend>;
using LazyGraph = Graph<LazyBackend>;
using LockFreeGraph = Graph<LockFreeBackend>;

}  // namespace cgraph
