#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cgraph {

/// List key. User vertex keys exclude the two sentinel values.
using Key = std::int64_t;

inline constexpr Key kSentinelMin = std::numeric_limits<Key>::min();
inline constexpr Key kSentinelMax = std::numeric_limits<Key>::max();

constexpr bool is_user_key(Key k) noexcept {
  return k != kSentinelMin && k != kSentinelMax;
}

inline void require_user_key(Key k) {
  if (!is_user_key(k)) throw std::invalid_argument("sentinel value used as a vertex key");
}

using Edge = std::pair<Key, Key>;

}  // namespace cgraph
