#include <array>

#include "cgraph/backends/common.hpp"

namespace cgraph {
namespace {
constexpr std::array<std::string_view, 4> kBackendNames = {"coarse", "hoh", "lazy", "lockfree"};
}

std::string_view to_string(BackendKind k) noexcept {
  return kBackendNames[static_cast<std::size_t>(k)];
}

std::optional<BackendKind> parse_backend(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kBackendNames.size(); ++i) {
    if (kBackendNames[i] == name) return static_cast<BackendKind>(i);
  }
  return std::nullopt;
}

}  // namespace cgraph
