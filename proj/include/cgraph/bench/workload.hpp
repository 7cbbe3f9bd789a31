#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "cgraph/op.hpp"

namespace cgraph::bench {

/// Methods in WorkloadSpec order.
inline constexpr std::array<Method, 6> kWorkloadMethods = {
    Method::AddVertex, Method::RemoveVertex, Method::ContainsVertex,
    Method::AddEdge,   Method::RemoveEdge,   Method::ContainsEdge,
};

/// Percentages for addV, remV, conV, addE, remE, conE. Sum is 100.
struct WorkloadSpec {
  std::array<unsigned, 6> percent{};

  static WorkloadSpec update_dominated() { return {{25, 10, 15, 25, 10, 15}}; }
  static WorkloadSpec contains_dominated() { return {{7, 3, 40, 7, 3, 40}}; }
  static WorkloadSpec edge_updates() { return {{0, 0, 0, 50, 50, 0}}; }
  /// Near-even mix used by the checker harness.
  static WorkloadSpec mixed() { return {{17, 17, 16, 17, 17, 16}}; }

  friend bool operator==(const WorkloadSpec&, const WorkloadSpec&) = default;
};

struct NamedWorkload {
  std::string name;  // "update", "contains", "edges" or "custom:a/b/c/d/e/f"
  WorkloadSpec spec;
};

/// Throws std::invalid_argument unless the percentages sum to 100.
void validate(const WorkloadSpec& spec);

/// Accepts update, contains, edges and custom:a,b,c,d,e,f. Throws
/// std::invalid_argument on anything else.
NamedWorkload parse_workload(std::string_view text);

/// Index of `m` in kWorkloadMethods; m must be one of them.
std::size_t workload_index(Method m) noexcept;

/// Seed for stream `stream` derived from a base seed (SplitMix64 steps).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

/// Draws ops with the spec's method probabilities and keys uniform over
/// [1, key_range]. Deterministic for a given seed.
class OpSampler {
 public:
  OpSampler(const WorkloadSpec& spec, std::int64_t key_range, std::uint64_t seed);

  Op next();

 private:
  std::array<unsigned, 6> cumulative_{};
  std::mt19937_64 rng_;
  std::uniform_int_distribution<unsigned> percent_{0, 99};
  std::uniform_int_distribution<std::int64_t> key_;
};

/// One draw from `rng`; equivalent to OpSampler::next.
Op sample_op(const WorkloadSpec& spec, std::int64_t key_range, std::mt19937_64& rng);

}  // namespace cgraph::bench
