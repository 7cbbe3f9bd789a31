#pragma once

#include <atomic>
#include <cstddef>
#include <utility>

namespace cgraph {

/// Owns every node a structure allocates. Nodes stay valid until the pool
/// is destroyed, so traversals never see freed memory. `Node` needs a
/// `Node* pool_next` member.
template <class Node>
class NodePool {
 public:
  NodePool() = default;
  NodePool(const NodePool&) = delete;
  NodePool& operator=(const NodePool&) = delete;

  ~NodePool() {
    Node* n = head_.load(std::memory_order_acquire);
    while (n != nullptr) {
      Node* next = n->pool_next;
      delete n;
      n = next;
    }
  }

  template <class... Args>
  Node* make(Args&&... args) {
    Node* n = new Node(std::forward<Args>(args)...);
    n->pool_next = head_.load(std::memory_order_relaxed);
    while (!head_.compare_exchange_weak(n->pool_next, n, std::memory_order_release,
                                        std::memory_order_relaxed)) {
    }
    count_.fetch_add(1, std::memory_order_relaxed);
    return n;
  }

  std::size_t size() const noexcept { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<Node*> head_{nullptr};
  std::atomic<std::size_t> count_{0};
};

}  // namespace cgraph
