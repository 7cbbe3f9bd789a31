#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cgraph/key.hpp"

namespace cgraph {

enum class Method : std::uint8_t {
  AddVertex,
  RemoveVertex,
  ContainsVertex,
  AddEdge,
  RemoveEdge,
  ContainsEdge,
  AcyclicAddEdge,
  AcyclicRemoveEdge,
  AcyclicContainsEdge,
  SetAdd,
  SetRemove,
  SetContains,
};

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Number of key arguments: 2 for edge methods, 1 otherwise.
int arity(Method m) noexcept;

bool is_edge_method(Method m) noexcept;

struct Op {
  Method method = Method::AddVertex;
  Key u = 0;
  Key v = 0;  // unused for single-key methods

  friend bool operator==(const Op&, const Op&) = default;
};

/// "AddEdge(1,2)" style rendering for diagnostics.
std::string to_string(const Op& op);

}  // namespace cgraph
