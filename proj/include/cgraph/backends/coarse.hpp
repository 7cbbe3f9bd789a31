#pragma once

#include <mutex>

#include "cgraph/backends/common.hpp"

namespace cgraph {

/// One mutex per graph instance guards every list operation.
class CoarseBackend : public LockedStorage {
 public:
  static constexpr BackendKind kind = BackendKind::Coarse;

  struct Window {
    Node* pred;
    Node* curr;
    std::unique_lock<std::mutex> guard;
  };

  template <Link L>
  Window locate(Node* head, Key key) const {
    sched::acquire(global_);
    std::unique_lock<std::mutex> guard(global_, std::adopt_lock);
    Node* pred = head;
    Node* curr = next_node<L>(pred);
    while (curr->val < key) {
      pred = curr;
      curr = next_node<L>(curr);
    }
    return Window{pred, curr, std::move(guard)};
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

 private:
  mutable std::mutex global_;
};

}  // namespace cgraph
