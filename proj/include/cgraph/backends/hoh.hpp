#pragma once

#include "cgraph/backends/common.hpp"

namespace cgraph {

/// Hand-over-hand lock coupling: a thread holds at most two node locks and
/// acquires the next one before releasing the previous.
class HohBackend : public LockedStorage {
 public:
  static constexpr BackendKind kind = BackendKind::Hoh;

  struct Window {
    Node* pred;
    Node* curr;
    NodeLock pred_lock;
    NodeLock curr_lock;
  };

  template <Link L>
  Window locate(Node* head, Key key) const {
    Node* pred = head;
    NodeLock pl(pred);
    Node* curr = next_node<L>(pred);
    NodeLock cl(curr);
    while (curr->val < key) {
      Node* succ = next_node<L>(curr);
      NodeLock sl(succ);
      pl = std::move(cl);
      cl = std::move(sl);
      pred = curr;
      curr = succ;
    }
    return Window{pred, curr, std::move(pl), std::move(cl)};
  }

  template <Link L>
  AddOutcome add(Node* head, Key key, Node* target = nullptr) {
    Window w = locate<L>(head, key);
    sched::point(sched::Site::LocateLocked);
    if (w.curr->val == key) {
      if (is_live(w.curr)) return AddOutcome::AlreadyPresent;
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
    Window w = locate<L>(head, key);
    if (w.curr->val == key && !w.curr->marked.load(std::memory_order_acquire) && is_live(w.curr)) {
      return w.curr;
    }
    return nullptr;
  }
};

}  // namespace cgraph
