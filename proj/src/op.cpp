#include "cgraph/op.hpp"

#include <array>

namespace cgraph {
namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "AddVertex",      "RemoveVertex",      "ContainsVertex",      "AddEdge",
    "RemoveEdge",     "ContainsEdge",      "AcyclicAddEdge",      "AcyclicRemoveEdge",
    "AcyclicContainsEdge", "SetAdd",       "SetRemove",           "SetContains",
};

}  // namespace

std::string_view method_name(Method m) noexcept { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Method>(i);
  }
  return std::nullopt;
}

bool is_edge_method(Method m) noexcept {
  switch (m) {
    case Method::AddEdge:
    case Method::RemoveEdge:
    case Method::ContainsEdge:
    case Method::AcyclicAddEdge:
    case Method::AcyclicRemoveEdge:
    case Method::AcyclicContainsEdge:
      return true;
    default:
      return false;
  }
}

int arity(Method m) noexcept { return is_edge_method(m) ? 2 : 1; }

std::string to_string(const Op& op) {
  std::string s(method_name(op.method));
  s += '(';
  s += std::to_string(op.u);
  if (arity(op.method) == 2) {
    s += ',';
    s += std::to_string(op.v);
  }
  s += ')';
  return s;
}

}  // namespace cgraph
