#include "cgraph/abstract_graph.hpp"

#include <deque>
#include <map>
#include <vector>

namespace cgraph {

bool AbstractGraph::closed() const {
  for (const auto& [u, v] : edges) {
    if (!vertices.contains(u) || !vertices.contains(v)) return false;
  }
  return true;
}

std::string to_string(const AbstractGraph& g) {
  std::string s = "V={";
  bool first = true;
  for (Key k : g.vertices) {
    if (!first) s += ',';
    s += std::to_string(k);
    first = false;
  }
  s += "} E={";
  first = true;
  for (const auto& [u, v] : g.edges) {
    if (!first) s += ',';
    s += '(' + std::to_string(u) + ',' + std::to_string(v) + ')';
    first = false;
  }
  s += '}';
  return s;
}

bool is_acyclic(const std::set<Edge>& edges) {
  // Kahn's algorithm.
  std::map<Key, std::size_t> indegree;
  std::map<Key, std::vector<Key>> succ;
  for (const auto& [u, v] : edges) {
    indegree.try_emplace(u, 0);
    ++indegree[v];
    succ[u].push_back(v);
  }
  std::deque<Key> ready;
  for (const auto& [k, d] : indegree) {
    if (d == 0) ready.push_back(k);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Key k = ready.front();
    ready.pop_front();
    ++removed;
    for (Key n : succ[k]) {
      if (--indegree[n] == 0) ready.push_back(n);
    }
  }
  return removed == indegree.size();
}

bool has_path(const std::set<Edge>& edges, Key from, Key to) {
  std::map<Key, std::vector<Key>> succ;
  for (const auto& [u, v] : edges) succ[u].push_back(v);
  std::set<Key> seen;
  std::deque<Key> frontier{from};
  while (!frontier.empty()) {
    Key k = frontier.front();
    frontier.pop_front();
    for (Key n : succ[k]) {
      if (n == to) return true;
      if (seen.insert(n).second) frontier.push_back(n);
    }
  }
  return false;
}

}  // namespace cgraph
