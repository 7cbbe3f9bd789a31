#pragma once

#include <atomic>
#include <cstdint>

#include "cgraph/backends/common.hpp"

namespace cgraph {

/// Node for the lock-free backend. The mark bit lives in bit 0 of the link
/// word so that mark and successor change in one CAS. A vertex node's vnext
/// carries its mark; enext holds its (never marked) edge list head.
struct alignas(8) LfNode {
  explicit LfNode(Key key, LfNode* target_vertex = nullptr) : val(key), target(target_vertex) {}

  const Key val;
  std::atomic<std::uintptr_t> vnext{0};
  std::atomic<std::uintptr_t> enext{0};
  LfNode* const target;
  LfNode* pool_next = nullptr;
};

/// Harris-Michael list with wait-free contains.
class LockFreeBackend {
 public:
  using Node = LfNode;
  static constexpr BackendKind kind = BackendKind::LockFree;

  struct Window {
    Node* pred;
    Node* curr;
  };

  static Node* ptr(std::uintptr_t w) noexcept { return reinterpret_cast<Node*>(w & ~std::uintptr_t{1}); }
  static bool mark_bit(std::uintptr_t w) noexcept { return (w & 1U) != 0; }
  static std::uintptr_t word(const Node* n, bool marked) noexcept {
    return reinterpret_cast<std::uintptr_t>(n) | (marked ? 1U : 0U);
  }

  template <Link L>
  static std::atomic<std::uintptr_t>& link(Node* n) noexcept {
    if constexpr (L == Link::Vertex) {
      return n->vnext;
    } else {
      return n->enext;
    }
  }

  template <Link L>
  static Node* next_node(const Node* n) noexcept {
    instr::count_step();
    return ptr(link<L>(const_cast<Node*>(n)).load(std::memory_order_acquire));
  }

  template <Link L>
  static bool is_marked(const Node* n) noexcept {
    return mark_bit(link<L>(const_cast<Node*>(n)).load(std::memory_order_acquire));
  }

  static Node* edge_head(const Node* vertex) noexcept {
    return ptr(vertex->enext.load(std::memory_order_acquire));
  }

  static bool is_live(const Node* n) noexcept {
    return n->target == nullptr || !is_marked<Link::Vertex>(n->target);
  }

  template <Link L>
  Node* make_list() {
    Node* head = pool_.make(kSentinelMin);
    Node* tail = pool_.make(kSentinelMax);
    link<L>(head).store(word(tail, false), std::memory_order_release);
    return head;
  }

  template <Link L>
  Node* make_node(Key key, Node* target) {
    if constexpr (L == Link::Vertex) {
      Node* n = pool_.make(key);
      n->enext.store(word(make_list<Link::Edge>(), false), std::memory_order_release);
      return n;
    } else {
      return pool_.make(key, target);
    }
  }

  /// Finds pred.val < key <= curr.val, snipping marked nodes on the way.
  template <Link L>
  Window locate(Node* head, Key key) {
    for (;;) {
      if (auto w = try_locate<L>(head, key)) return *w;
      sched::point(sched::Site::Retry);
    }
  }

  template <Link L>
  AddOutcome add(Node* head, Key key, Node* target = nullptr) {
    Node* fresh = nullptr;
    for (;;) {
      Window w = locate<L>(head, key);
      sched::point(sched::Site::LocateLocked);
      if (w.curr->val == key) {
        if (is_live(w.curr)) return AddOutcome::AlreadyPresent;
        // Stale edge node: delete it logically; the next locate snips it.
        std::uintptr_t succ = link<L>(w.curr).load(std::memory_order_acquire);
        if (!mark_bit(succ) &&
            link<L>(w.curr).compare_exchange_strong(succ, succ | 1U, std::memory_order_acq_rel)) {
          instr::count_write();
        }
        continue;
      }
      if (fresh == nullptr) fresh = make_node<L>(key, target);
      link<L>(fresh).store(word(w.curr, false), std::memory_order_relaxed);
      std::uintptr_t expected = word(w.curr, false);
      if (link<L>(w.pred).compare_exchange_strong(expected, word(fresh, false),
                                                  std::memory_order_acq_rel)) {
        instr::count_write();
        return AddOutcome::Inserted;
      }
    }
  }

  template <Link L>
  bool remove(Node* head, Key key) {
    for (;;) {
      Window w = locate<L>(head, key);
      sched::point(sched::Site::LocateLocked);
      if (w.curr->val != key) return false;
      std::uintptr_t succ = link<L>(w.curr).load(std::memory_order_acquire);
      if (mark_bit(succ)) continue;
      if (!link<L>(w.curr).compare_exchange_strong(succ, succ | 1U, std::memory_order_acq_rel)) {
        continue;
      }
      instr::count_write();
      const bool live = is_live(w.curr);
      std::uintptr_t expected = word(w.curr, false);
      if (link<L>(w.pred).compare_exchange_strong(expected, succ, std::memory_order_acq_rel)) {
        instr::count_write();
      }
      return live;
    }
  }

  /// Wait-free: no locks, no writes, no help.
  template <Link L>
  Node* contains(Node* head, Key key) const {
    Node* curr = head;
    while (curr->val < key) curr = next_node<L>(curr);
    if (curr->val == key && !is_marked<L>(curr) && is_live(curr)) return curr;
    return nullptr;
  }

  std::size_t allocated() const noexcept { return pool_.size(); }

 private:
  template <Link L>
  std::optional<Window> try_locate(Node* head, Key key) {
    Node* pred = head;
    Node* curr = next_node<L>(pred);
    for (;;) {
      std::uintptr_t succ = link<L>(curr).load(std::memory_order_acquire);
      while (mark_bit(succ)) {
        std::uintptr_t expected = word(curr, false);
        if (!link<L>(pred).compare_exchange_strong(expected, word(ptr(succ), false),
                                                   std::memory_order_acq_rel)) {
          return std::nullopt;
        }
        instr::count_write();
        curr = ptr(succ);
        instr::count_step();
        succ = link<L>(curr).load(std::memory_order_acquire);
      }
      if (curr->val >= key) return Window{pred, curr};
      pred = curr;
      curr = ptr(succ);
      instr::count_step();
    }
  }

  NodePool<Node> pool_;
};

}  // namespace cgraph
