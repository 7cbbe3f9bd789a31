#pragma once

#include "cgraph/backends/common.hpp"

namespace cgraph {

/// Lazy list: optimistic traversal, lock pred/curr, validate, mark before
/// unlink. Contains takes no locks.
class LazyBackend : public LockedStorage {
 public:
  static constexpr BackendKind kind = BackendKind::Lazy;

  struct Window {
    Node* pred;
    Node* curr;
    NodeLock pred_lock;
    NodeLock curr_lock;
  };

  static bool validate(const Node* pred, const Node* curr, Link l) noexcept {
    Node* after = l == Link::Vertex ? pred->vnext.load(std::memory_order_acquire)
                                    : pred->enext.load(std::memory_order_acquire);
    return !pred->marked.load(std::memory_order_acquire) &&
           !curr->marked.load(std::memory_order_acquire) && after == curr;
  }

  /// Returns pred.val < key <= curr.val with both nodes locked and validated.
  template <Link L>
  Window locate(Node* head, Key key) {
    for (;;) {
      Node* pred = head;
      Node* curr = next_node<L>(pred);
      while (curr->val < key) {
        pred = curr;
        curr = next_node<L>(curr);
      }
      NodeLock pl(pred);
      NodeLock cl(curr);
      if (validate(pred, curr, L)) return Window{pred, curr, std::move(pl), std::move(cl)};
      pl.release();
      cl.release();
      sched::point(sched::Site::Retry);
    }
  }

  template <Link L>
  AddOutcome add(Node* head, Key key, Node* target = nullptr) {
    Window w = locate<L>(head, key);
    sched::point(sched::Site::LocateLocked);
    if (w.curr->val == key) {
      if (is_live(w.curr)) return AddOutcome::AlreadyPresent;
      // Stale edge node left behind by a removed target: swap in a fresh one.
      Node* fresh = make_node<L>(key, target);
      link<L>(fresh).store(link<L>(w.curr).load(std::memory_order_acquire),
                           std::memory_order_relaxed);
      mark(w.curr);
      unlink<L>(w.pred, w.curr, fresh);
      return AddOutcome::Inserted;
    }
    Node* fresh = make_node<L>(key, target);
    link<L>(fresh).store(w.curr, std::memory_order_relaxed);
    publish<L>(w.pred, fresh);
    return AddOutcome::Inserted;
  }

  /// Removes the node keyed `key`; true iff it was present and live.
  template <Link L>
  bool remove(Node* head, Key key) {
    Window w = locate<L>(head, key);
    sched::point(sched::Site::LocateLocked);
    if (w.curr->val != key) return false;
    const bool live = is_live(w.curr);
    mark(w.curr);
    unlink<L>(w.pred, w.curr, link<L>(w.curr).load(std::memory_order_acquire));
    return live;
  }

  template <Link L>
  Node* contains(Node* head, Key key) const {
    Node* curr = head;
    while (curr->val < key) curr = next_node<L>(curr);
    if (curr->val == key && !curr->marked.load(std::memory_order_acquire) && is_live(curr)) {
      return curr;
    }
    return nullptr;
  }
};

}  // namespace cgraph
