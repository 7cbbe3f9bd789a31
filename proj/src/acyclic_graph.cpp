#include "cgraph/acyclic_graph.hpp"

#include <cassert>
#include <unordered_map>
#include <vector>

namespace cgraph {
namespace {

AcyclicEdge* next_edge(const AcyclicEdge* e) noexcept {
  instr::count_step();
  return e->enext.load(std::memory_order_acquire);
}

AcyclicVertex* next_vertex(const AcyclicVertex* n) noexcept {
  instr::count_step();
  return n->vnext.load(std::memory_order_acquire);
}

bool vertex_marked(const AcyclicVertex* n) noexcept {
  return n->marked.load(std::memory_order_acquire);
}

EdgeStatus status_of(const AcyclicEdge* e) noexcept {
  return e->status.load(std::memory_order_acquire);
}

// The edge's target vertex is still the current incarnation.
bool live(const AcyclicEdge* e) noexcept {
  return e->target == nullptr || !vertex_marked(e->target);
}

void unlink_edge(AcyclicEdge* pred, AcyclicEdge* victim, AcyclicEdge* succ) noexcept {
  if (status_of(victim) != EdgeStatus::Marked) {
    instr::unmarked_unlinks.fetch_add(1, std::memory_order_relaxed);
  }
  pred->enext.store(succ, std::memory_order_release);
  instr::count_write();
}

// Keys reached so far, in discovery order, with explored flags.
class ReachSet {
 public:
  bool insert(Key k) {
    if (!index_.try_emplace(k, keys_.size()).second) return false;
    keys_.push_back(k);
    explored_.push_back(false);
    return true;
  }
  bool contains(Key k) const { return index_.contains(k); }
  void set_explored(Key k) {
    auto it = index_.find(k);
    if (it != index_.end()) explored_[it->second] = true;
  }
  std::optional<Key> next_unexplored() {
    while (cursor_ < keys_.size() && explored_[cursor_]) ++cursor_;
    if (cursor_ == keys_.size()) return std::nullopt;
    return keys_[cursor_];
  }

 private:
  std::vector<Key> keys_;
  std::vector<bool> explored_;
  std::unordered_map<Key, std::size_t> index_;
  std::size_t cursor_ = 0;
};

}  // namespace

std::string_view to_string(EdgeStatus s) noexcept {
  switch (s) {
    case EdgeStatus::Transit: return "transit";
    case EdgeStatus::Marked: return "marked";
    case EdgeStatus::Added: return "added";
  }
  return "?";
}

AcyclicGraph::AcyclicGraph() {
  head_ = vertex_pool_.make(kSentinelMin, nullptr);
  AcyclicVertex* tail = vertex_pool_.make(kSentinelMax, nullptr);
  head_->vnext.store(tail, std::memory_order_release);
}

AcyclicEdge* AcyclicGraph::make_edge(Key v, AcyclicVertex* target) {
  AcyclicEdge* e = edge_pool_.make(v, target, EdgeStatus::Transit);
  if (StatusObserver* o = status_observer.load(std::memory_order_acquire)) o->on_created(e);
  return e;
}

AcyclicVertex* AcyclicGraph::make_vertex(Key u) {
  // Edge list sentinels are permanently added so both validators accept them.
  AcyclicEdge* eh = edge_pool_.make(kSentinelMin, nullptr, EdgeStatus::Added);
  AcyclicEdge* et = edge_pool_.make(kSentinelMax, nullptr, EdgeStatus::Added);
  eh->enext.store(et, std::memory_order_release);
  return vertex_pool_.make(u, eh);
}

void AcyclicGraph::set_status(AcyclicEdge* e, EdgeStatus to) noexcept {
  const EdgeStatus from = e->status.exchange(to, std::memory_order_acq_rel);
  instr::count_write();
  if (!legal_transition(from, to)) {
    instr::illegal_status_transitions.fetch_add(1, std::memory_order_relaxed);
  }
  if (StatusObserver* o = status_observer.load(std::memory_order_acquire)) {
    o->on_transition(e, from, to);
  }
}

bool AcyclicGraph::acyclic_validate_edge(const AcyclicEdge* e1, const AcyclicEdge* e2) noexcept {
  return status_of(e1) == EdgeStatus::Added && status_of(e2) == EdgeStatus::Added &&
         e1->enext.load(std::memory_order_acquire) == e2;
}

bool AcyclicGraph::modified_validate_edge(const AcyclicEdge* e1, const AcyclicEdge* e2) noexcept {
  return status_of(e1) != EdgeStatus::Marked && status_of(e2) != EdgeStatus::Marked &&
         e1->enext.load(std::memory_order_acquire) == e2;
}

// ---- vertices (lazy list) ----

AcyclicGraph::VertexWindow AcyclicGraph::locate_vertex(Key u) {
  for (;;) {
    AcyclicVertex* pred = head_;
    AcyclicVertex* curr = next_vertex(pred);
    while (curr->val < u) {
      pred = curr;
      curr = next_vertex(curr);
    }
    VertexLock pl(pred);
    VertexLock cl(curr);
    if (!vertex_marked(pred) && !vertex_marked(curr) &&
        pred->vnext.load(std::memory_order_acquire) == curr) {
      return VertexWindow{pred, curr, std::move(pl), std::move(cl)};
    }
    pl.release();
    cl.release();
    sched::point(sched::Site::Retry);
  }
}

bool AcyclicGraph::add_vertex(Key u) {
  require_user_key(u);
  VertexWindow w = locate_vertex(u);
  sched::point(sched::Site::LocateLocked);
  if (w.curr->val != u) {
    AcyclicVertex* fresh = make_vertex(u);
    fresh->vnext.store(w.curr, std::memory_order_relaxed);
    w.pred->vnext.store(fresh, std::memory_order_release);
    instr::count_write();
  }
  return true;
}

bool AcyclicGraph::remove_vertex(Key u) {
  require_user_key(u);
  VertexWindow w = locate_vertex(u);
  sched::point(sched::Site::LocateLocked);
  if (w.curr->val != u) return false;
  w.curr->marked.store(true, std::memory_order_release);
  instr::count_write();
  w.pred->vnext.store(w.curr->vnext.load(std::memory_order_acquire), std::memory_order_release);
  instr::count_write();
  return true;
}

AcyclicVertex* AcyclicGraph::find_vertex(Key u) const {
  AcyclicVertex* curr = head_;
  while (curr->val < u) curr = next_vertex(curr);
  if (curr->val != u || vertex_marked(curr)) return nullptr;
  return curr;
}

bool AcyclicGraph::contains_vertex(Key u) const {
  require_user_key(u);
  return find_vertex(u) != nullptr;
}

// ---- edges ----

std::optional<AcyclicGraph::EdgeWindow> AcyclicGraph::acyclic_locate_edge(Key u, Key v,
                                                                          LocateMode mode) {
  AcyclicVertex* v1 = find_vertex(u);
  if (v1 == nullptr) return std::nullopt;
  AcyclicVertex* v2 = find_vertex(v);
  if (v2 == nullptr) return std::nullopt;
  sched::point(sched::Site::EdgeLocateVertices);
  if (vertex_marked(v1) || vertex_marked(v2)) return std::nullopt;
  for (;;) {
    AcyclicEdge* pred = v1->edge_head;
    AcyclicEdge* curr = next_edge(pred);
    while (curr->val < v) {
      pred = curr;
      curr = next_edge(curr);
    }
    sched::point(sched::Site::EdgeTraversed);
    EdgeLock pl(pred);
    EdgeLock cl(curr);
    const bool ok = mode == LocateMode::Add ? modified_validate_edge(pred, curr)
                                            : acyclic_validate_edge(pred, curr);
    if (ok) {
      sched::point(sched::Site::EdgeLocateLocked);
      return EdgeWindow{v1, v2, pred, curr, std::move(pl), std::move(cl)};
    }
    pl.release();
    cl.release();
    sched::point(sched::Site::Retry);
  }
}

AcyclicGraph::EdgeWindow AcyclicGraph::new_locate_edge(AcyclicVertex* v1, AcyclicEdge* transit) {
  for (;;) {
    AcyclicEdge* pred = v1->edge_head;
    AcyclicEdge* curr = next_edge(pred);
    while (curr->val < transit->val) {
      pred = curr;
      curr = next_edge(curr);
    }
    sched::point(sched::Site::EdgeTraversed);
    EdgeLock pl(pred);
    EdgeLock cl(curr);
    if (modified_validate_edge(pred, curr)) {
      assert(curr == transit);
      sched::point(sched::Site::RollbackLocked);
      return EdgeWindow{v1, transit->target, pred, curr, std::move(pl), std::move(cl)};
    }
    pl.release();
    cl.release();
    sched::point(sched::Site::Retry);
  }
}

bool AcyclicGraph::acyclic_add_edge(Key u, Key v) {
  require_user_key(u);
  require_user_key(v);
  AcyclicVertex* v1 = nullptr;
  AcyclicEdge* e3 = nullptr;
  for (;;) {
    auto w = acyclic_locate_edge(u, v, LocateMode::Add);
    if (!w) return false;
    AcyclicEdge* curr = w->curr;
    if (curr->val == v) {
      if (status_of(curr) == EdgeStatus::Transit) {
        // Another thread's insert is undecided; its creator resolves it.
        w.reset();
        sched::point(sched::Site::Retry);
        continue;
      }
      if (live(curr)) return true;
      // Stale edge into a removed vertex: replace it.
      e3 = make_edge(v, w->v2);
      e3->enext.store(curr->enext.load(std::memory_order_acquire), std::memory_order_relaxed);
      set_status(curr, EdgeStatus::Marked);
      unlink_edge(w->pred, curr, e3);
    } else {
      e3 = make_edge(v, w->v2);
      e3->enext.store(curr, std::memory_order_relaxed);
      w->pred->enext.store(e3, std::memory_order_release);
      instr::count_write();
    }
    v1 = w->v1;
    break;
  }
  sched::point(sched::Site::TransitLinked);
  const bool cycle = path_exists(v, u);
  sched::point(sched::Site::StatusResolve);
  if (cycle) {
    EdgeWindow r = new_locate_edge(v1, e3);
    set_status(e3, EdgeStatus::Marked);
    unlink_edge(r.pred, e3, e3->enext.load(std::memory_order_acquire));
    return false;
  }
  set_status(e3, EdgeStatus::Added);
  return true;
}

bool AcyclicGraph::acyclic_remove_edge(Key u, Key v) {
  require_user_key(u);
  require_user_key(v);
  auto w = acyclic_locate_edge(u, v, LocateMode::Remove);
  if (!w) return false;
  if (w->curr->val == v) {
    set_status(w->curr, EdgeStatus::Marked);
    unlink_edge(w->pred, w->curr, w->curr->enext.load(std::memory_order_acquire));
  }
  return true;
}

bool AcyclicGraph::acyclic_contains_edge(Key u, Key v) const {
  require_user_key(u);
  require_user_key(v);
  AcyclicVertex* v1 = find_vertex(u);
  if (v1 == nullptr) return false;
  if (find_vertex(v) == nullptr) return false;
  AcyclicEdge* e = v1->edge_head;
  while (e->val < v) e = next_edge(e);
  return e->val == v && status_of(e) == EdgeStatus::Added && live(e);
}

bool AcyclicGraph::path_exists(Key from, Key to) const {
  require_user_key(from);
  require_user_key(to);
  ReachSet reach;
  // Adds the unmarked, live out-neighbors of `n`; true once `to` is seen.
  auto collect = [&](const AcyclicVertex* n) {
    for (AcyclicEdge* e = next_edge(n->edge_head); e->val != kSentinelMax; e = next_edge(e)) {
      if (status_of(e) != EdgeStatus::Marked && live(e)) reach.insert(e->val);
    }
    sched::point(sched::Site::ReachExpand);
    return reach.contains(to);
  };
  AcyclicVertex* start = find_vertex(from);
  if (start == nullptr) return false;
  if (collect(start)) return true;
  while (auto k = reach.next_unexplored()) {
    reach.set_explored(*k);
    AcyclicVertex* n = find_vertex(*k);
    if (n == nullptr) continue;
    if (collect(n)) return true;
  }
  return false;
}

// ---- quiescent views ----

AbstractGraph AcyclicGraph::snapshot() const {
  AbstractGraph g;
  std::vector<const AcyclicVertex*> present;
  for (AcyclicVertex* n = next_vertex(head_); n->val != kSentinelMax; n = next_vertex(n)) {
    if (!vertex_marked(n)) {
      g.vertices.insert(n->val);
      present.push_back(n);
    }
  }
  for (const AcyclicVertex* n : present) {
    for (AcyclicEdge* e = next_edge(n->edge_head); e->val != kSentinelMax; e = next_edge(e)) {
      if (status_of(e) == EdgeStatus::Added && live(e) && g.vertices.contains(e->val)) {
        g.edges.insert({n->val, e->val});
      }
    }
  }
  return g;
}

std::set<Edge> AcyclicGraph::visible_edges() const {
  std::set<Edge> out;
  for (AcyclicVertex* n = next_vertex(head_); n->val != kSentinelMax; n = next_vertex(n)) {
    if (vertex_marked(n)) continue;
    for (AcyclicEdge* e = next_edge(n->edge_head); e->val != kSentinelMax; e = next_edge(e)) {
      if (status_of(e) != EdgeStatus::Marked && live(e)) out.insert({n->val, e->val});
    }
  }
  return out;
}

bool AcyclicGraph::well_formed() const {
  if (head_->val != kSentinelMin || vertex_marked(head_)) return false;
  Key prev = kSentinelMin;
  AcyclicVertex* n = next_vertex(head_);
  for (; n != nullptr && n->val != kSentinelMax; n = next_vertex(n)) {
    if (n->val <= prev || n->edge_head == nullptr) return false;
    prev = n->val;
    const AcyclicEdge* eh = n->edge_head;
    if (eh->val != kSentinelMin || status_of(eh) != EdgeStatus::Added) return false;
    Key eprev = kSentinelMin;
    AcyclicEdge* e = next_edge(eh);
    for (; e != nullptr && e->val != kSentinelMax; e = next_edge(e)) {
      if (e->val <= eprev) return false;
      eprev = e->val;
    }
    if (e == nullptr || status_of(e) != EdgeStatus::Added || next_edge(e) != nullptr) return false;
  }
  return n != nullptr && next_vertex(n) == nullptr;
}

std::size_t AcyclicGraph::node_count() const {
  std::size_t count = 1;
  for (AcyclicVertex* n = next_vertex(head_); n != nullptr; n = next_vertex(n)) {
    ++count;
    if (n->edge_head == nullptr) continue;
    for (AcyclicEdge* e = n->edge_head; e != nullptr; e = next_edge(e)) ++count;
  }
  return count;
}

}  // namespace cgraph
