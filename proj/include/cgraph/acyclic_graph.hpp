#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string_view>

#include "cgraph/abstract_graph.hpp"
#include "cgraph/backends/common.hpp"
#include "cgraph/node_pool.hpp"

namespace cgraph {

enum class EdgeStatus : std::uint8_t { Transit, Marked, Added };

std::string_view to_string(EdgeStatus s) noexcept;

/// transit -> added, transit -> marked, added -> marked.
constexpr bool legal_transition(EdgeStatus from, EdgeStatus to) noexcept {
  return (from == EdgeStatus::Transit && to != EdgeStatus::Transit) ||
         (from == EdgeStatus::Added && to == EdgeStatus::Marked);
}

struct AcyclicVertex;

struct AcyclicEdge {
  AcyclicEdge(Key key, AcyclicVertex* target_vertex, EdgeStatus initial)
      : val(key), status(initial), target(target_vertex) {}

  const Key val;
  std::atomic<AcyclicEdge*> enext{nullptr};
  std::atomic<EdgeStatus> status;
  AcyclicVertex* const target;  // null on sentinels
  std::mutex lock;
  AcyclicEdge* pool_next = nullptr;
};

struct AcyclicVertex {
  AcyclicVertex(Key key, AcyclicEdge* head) : val(key), edge_head(head) {}

  const Key val;
  std::atomic<AcyclicVertex*> vnext{nullptr};
  AcyclicEdge* const edge_head;  // null on the vertex list sentinels
  std::atomic<bool> marked{false};
  std::mutex lock;
  AcyclicVertex* pool_next = nullptr;
};

/// Receives every edge status change. Test instrumentation.
class StatusObserver {
 public:
  virtual ~StatusObserver() = default;
  virtual void on_created(const AcyclicEdge* e) = 0;
  virtual void on_transition(const AcyclicEdge* e, EdgeStatus from, EdgeStatus to) = 0;
};

inline std::atomic<StatusObserver*> status_observer{nullptr};

/// Directed graph whose added edges never form a cycle. Edges are first
/// linked in transit, checked with path_exists, then promoted to added or
/// rolled back.
class AcyclicGraph {
 public:
  enum class LocateMode : std::uint8_t { Add, Remove };

  using VertexLock = BasicNodeLock<AcyclicVertex>;
  using EdgeLock = BasicNodeLock<AcyclicEdge>;

  struct EdgeWindow {
    AcyclicVertex* v1;
    AcyclicVertex* v2;
    AcyclicEdge* pred;
    AcyclicEdge* curr;
    EdgeLock pred_lock;
    EdgeLock curr_lock;
  };

  AcyclicGraph();
  AcyclicGraph(const AcyclicGraph&) = delete;
  AcyclicGraph& operator=(const AcyclicGraph&) = delete;

  bool add_vertex(Key u);
  bool remove_vertex(Key u);
  bool contains_vertex(Key u) const;

  /// False if a vertex is absent or the edge would close a cycle. Two
  /// concurrent calls that together close a cycle may both fail.
  bool acyclic_add_edge(Key u, Key v);
  /// True whenever both vertices are present.
  bool acyclic_remove_edge(Key u, Key v);
  /// True iff the edge is present with status added.
  bool acyclic_contains_edge(Key u, Key v) const;

  /// Wait-free reachability over transit and added edges.
  bool path_exists(Key from, Key to) const;

  /// Vertices and added edges. Quiescent use only.
  AbstractGraph snapshot() const;
  /// Unmarked (transit or added) edges between present vertices. Quiescent use only.
  std::set<Edge> visible_edges() const;
  bool well_formed() const;
  /// Linked nodes in all lists, sentinels included. Quiescent use only.
  std::size_t node_count() const;

  /// Finds both vertices, re-checks their marks, then locks and validates
  /// the edge window for `v` in u's list. Empty if a vertex is missing.
  std::optional<EdgeWindow> acyclic_locate_edge(Key u, Key v, LocateMode mode);
  /// Locks and validates the window whose curr is `transit`, which must be
  /// an unmarked node in v1's edge list owned by the caller.
  EdgeWindow new_locate_edge(AcyclicVertex* v1, AcyclicEdge* transit);

  static bool acyclic_validate_edge(const AcyclicEdge* e1, const AcyclicEdge* e2) noexcept;
  static bool modified_validate_edge(const AcyclicEdge* e1, const AcyclicEdge* e2) noexcept;

  /// Unmarked vertex node keyed `u`, or null. Lock-free traversal.
  AcyclicVertex* find_vertex(Key u) const;
  AcyclicVertex* vertex_head() const noexcept { return head_; }

  static void set_status(AcyclicEdge* e, EdgeStatus to) noexcept;

 private:
  struct VertexWindow {
    AcyclicVertex* pred;
    AcyclicVertex* curr;
    VertexLock pred_lock;
    VertexLock curr_lock;
  };

  VertexWindow locate_vertex(Key u);
  AcyclicEdge* make_edge(Key v, AcyclicVertex* target);
  AcyclicVertex* make_vertex(Key u);

  NodePool<AcyclicVertex> vertex_pool_;
  NodePool<AcyclicEdge> edge_pool_;
  AcyclicVertex* head_;
};

}  // namespace cgraph
