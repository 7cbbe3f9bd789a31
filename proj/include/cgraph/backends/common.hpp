#pragma once

#include <atomic>
#include <concepts>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string_view>
#include <utility>

#include "cgraph/instrument.hpp"
#include "cgraph/key.hpp"
#include "cgraph/node_pool.hpp"

namespace cgraph {

enum class BackendKind : std::uint8_t { Coarse, Hoh, Lazy, LockFree };

std::string_view to_string(BackendKind k) noexcept;
std::optional<BackendKind> parse_backend(std::string_view name) noexcept;

/// Which link field a list follows: vertex lists use vnext, edge lists enext.
enum class Link : std::uint8_t { Vertex, Edge };

enum class AddOutcome : std::uint8_t { Inserted, AlreadyPresent };

/// Node shared by the lock-based backends. A vertex node keeps its edge
/// list head in `enext`; an edge node links through `enext` and records the
/// vertex node it points at in `target`.
struct LockedNode {
  explicit LockedNode(Key key, LockedNode* target_vertex = nullptr)
      : val(key), target(target_vertex) {}

  const Key val;
  std::atomic<LockedNode*> vnext{nullptr};
  std::atomic<LockedNode*> enext{nullptr};
  std::atomic<bool> marked{false};
  LockedNode* const target;
  std::mutex lock;
  LockedNode* pool_next = nullptr;
};

/// Movable RAII lock on one node with a `lock` mutex member.
template <class N>
class BasicNodeLock {
 public:
  BasicNodeLock() = default;
  explicit BasicNodeLock(N* n) : node_(n) { sched::acquire(n->lock); }
  BasicNodeLock(BasicNodeLock&& o) noexcept : node_(std::exchange(o.node_, nullptr)) {}
  BasicNodeLock& operator=(BasicNodeLock&& o) noexcept {
    if (this != &o) {
      release();
      node_ = std::exchange(o.node_, nullptr);
    }
    return *this;
  }
  BasicNodeLock(const BasicNodeLock&) = delete;
  BasicNodeLock& operator=(const BasicNodeLock&) = delete;
  ~BasicNodeLock() { release(); }

  void release() noexcept {
    if (node_ != nullptr) {
      node_->lock.unlock();
      node_ = nullptr;
    }
  }

  bool owns() const noexcept { return node_ != nullptr; }

 private:
  N* node_ = nullptr;
};

using NodeLock = BasicNodeLock<LockedNode>;

/// Allocation and accessors shared by the coarse, hoh and lazy backends.
class LockedStorage {
 public:
  using Node = LockedNode;

  template <Link L>
  static std::atomic<Node*>& link(Node* n) noexcept {
    if constexpr (L == Link::Vertex) {
      return n->vnext;
    } else {
      return n->enext;
    }
  }

  template <Link L>
  static Node* next_node(const Node* n) noexcept {
    instr::count_step();
    return link<L>(const_cast<Node*>(n)).load(std::memory_order_acquire);
  }

  template <Link L>
  static bool is_marked(const Node* n) noexcept {
    return n->marked.load(std::memory_order_acquire);
  }

  static Node* edge_head(const Node* vertex) noexcept {
    return vertex->enext.load(std::memory_order_acquire);
  }

  /// An edge node is live while the vertex it points at is unmarked.
  static bool is_live(const Node* n) noexcept {
    return n->target == nullptr || !n->target->marked.load(std::memory_order_acquire);
  }

  /// Head sentinel linked to tail sentinel through link L.
  template <Link L>
  Node* make_list() {
    Node* head = pool_.make(kSentinelMin);
    Node* tail = pool_.make(kSentinelMax);
    link<L>(head).store(tail, std::memory_order_release);
    return head;
  }

  /// Fresh node for list L: vertex nodes get an empty edge list.
  template <Link L>
  Node* make_node(Key key, Node* target) {
    if constexpr (L == Link::Vertex) {
      Node* n = pool_.make(key);
      n->enext.store(make_list<Link::Edge>(), std::memory_order_release);
      return n;
    } else {
      return pool_.make(key, target);
    }
  }

  static void mark(Node* n) noexcept {
    n->marked.store(true, std::memory_order_release);
    instr::count_write();
  }

  /// pred.next <- succ, removing `victim`.
  template <Link L>
  static void unlink(Node* pred, Node* victim, Node* succ) noexcept {
    if (!victim->marked.load(std::memory_order_acquire)) {
      instr::unmarked_unlinks.fetch_add(1, std::memory_order_relaxed);
    }
    link<L>(pred).store(succ, std::memory_order_release);
    instr::count_write();
  }

  template <Link L>
  static void publish(Node* pred, Node* fresh) noexcept {
    link<L>(pred).store(fresh, std::memory_order_release);
    instr::count_write();
  }

  std::size_t allocated() const noexcept { return pool_.size(); }

 private:
  NodePool<Node> pool_;
};

template <class B>
concept ListBackend = requires(B& b, const B& cb, typename B::Node* n, Key k) {
  { B::kind } -> std::convertible_to<BackendKind>;
  { b.template make_list<Link::Vertex>() } -> std::same_as<typename B::Node*>;
  { b.template add<Link::Vertex>(n, k, n) } -> std::same_as<AddOutcome>;
  { b.template add<Link::Edge>(n, k, n) } -> std::same_as<AddOutcome>;
  { b.template remove<Link::Vertex>(n, k) } -> std::same_as<bool>;
  { b.template remove<Link::Edge>(n, k) } -> std::same_as<bool>;
  { cb.template contains<Link::Vertex>(n, k) } -> std::same_as<typename B::Node*>;
  { cb.template contains<Link::Edge>(n, k) } -> std::same_as<typename B::Node*>;
  { B::template next_node<Link::Vertex>(n) } -> std::same_as<typename B::Node*>;
  { B::template is_marked<Link::Edge>(n) } -> std::same_as<bool>;
  { B::edge_head(n) } -> std::same_as<typename B::Node*>;
  { B::is_live(n) } -> std::same_as<bool>;
};

}  // namespace cgraph
