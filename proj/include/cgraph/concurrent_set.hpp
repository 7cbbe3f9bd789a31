#pragma once

#include <vector>

#include "cgraph/backends/common.hpp"

namespace cgraph {

/// A single ordered set over a list backend, addressed by its head sentinel.
/// Uses the edge link, so nodes carry no nested lists.
template <ListBackend B>
class ConcurrentSet {
 public:
  using Node = typename B::Node;
  static constexpr Link kLink = Link::Edge;

  ConcurrentSet() : head_(backend_.template make_list<kLink>()) {}
  ConcurrentSet(const ConcurrentSet&) = delete;
  ConcurrentSet& operator=(const ConcurrentSet&) = delete;

  AddOutcome add(Key key) {
    require_user_key(key);
    return backend_.template add<kLink>(head_, key, nullptr);
  }

  bool remove(Key key) {
    require_user_key(key);
    return backend_.template remove<kLink>(head_, key);
  }

  /// Handle to the unmarked node keyed `key`, or null.
  Node* find(Key key) const {
    require_user_key(key);
    return backend_.template contains<kLink>(head_, key);
  }

  bool contains(Key key) const { return find(key) != nullptr; }

  auto locate(Key key) { return backend_.template locate<kLink>(head_, key); }

  /// Keys of unmarked nodes in link order. Quiescent use only.
  std::vector<Key> keys() const {
    std::vector<Key> out;
    for (Node* n = B::template next_node<kLink>(head_); n->val != kSentinelMax;
         n = B::template next_node<kLink>(n)) {
      if (!B::template is_marked<kLink>(n)) out.push_back(n->val);
    }
    return out;
  }

  /// Keys of every linked node, marked or not. Quiescent use only.
  std::vector<Key> linked_keys() const {
    std::vector<Key> out;
    for (Node* n = B::template next_node<kLink>(head_); n->val != kSentinelMax;
         n = B::template next_node<kLink>(n)) {
      out.push_back(n->val);
    }
    return out;
  }

  bool well_formed() const {
    if (head_->val != kSentinelMin || B::template is_marked<kLink>(head_)) return false;
    Key prev = kSentinelMin;
    Node* n = B::template next_node<kLink>(head_);
    for (; n != nullptr && n->val != kSentinelMax; n = B::template next_node<kLink>(n)) {
      if (n->val <= prev) return false;
      prev = n->val;
    }
    return n != nullptr && !B::template is_marked<kLink>(n) &&
           B::template next_node<kLink>(n) == nullptr;
  }

  Node* head() const noexcept { return head_; }
  B& backend() noexcept { return backend_; }

 private:
  mutable B backend_;
  Node* head_;
};

}  // namespace cgraph
