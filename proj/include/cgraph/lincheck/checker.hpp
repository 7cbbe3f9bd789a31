#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cgraph/abstract_graph.hpp"
#include "cgraph/lincheck/history.hpp"
#include "cgraph/oracle.hpp"

namespace cgraph::lin {

enum class Verdict : std::uint8_t { Linearizable, NotLinearizable, BudgetExhausted };

std::string_view to_string(Verdict v) noexcept;

struct CheckOptions {
  /// Maximum search states expanded before giving up.
  std::uint64_t budget = 10'000'000;
};

struct CheckResult {
  Verdict verdict = Verdict::NotLinearizable;
  /// Indices into the completed ops, in linearization order. Linearizable only.
  std::vector<std::size_t> witness;
  std::uint64_t states = 0;

  bool linearizable() const noexcept { return verdict == Verdict::Linearizable; }
};

/// Maximum number of completed ops a single check accepts.
inline constexpr std::size_t kMaxOps = 64;

/// Depth-first search over the minimal ops of the remaining history,
/// memoized on (linearized set, abstract state). Pending invocations are
/// discarded. Throws std::invalid_argument on ill-formed histories or more
/// than kMaxOps operations.
CheckResult check_linearizable(const History& h, OracleKind kind, CheckOptions options = {});
CheckResult check_linearizable(std::span<const CompletedOp> ops, OracleKind kind,
                               CheckOptions options = {});

/// Edges of the other AcyclicAddEdge ops whose intervals overlap ops[i].
std::vector<Edge> overlapping_acyclic_adds(std::span<const CompletedOp> ops, std::size_t i);

/// State after linearizing `op` at `state`, or empty if its result is not
/// admissible there. A false AcyclicAddEdge is also admissible whenever
/// (u,v) is absent and v reaches u through state.edges, `concurrent_adds`
/// and (u,v).
std::optional<AbstractGraph> linearize_step(const AbstractGraph& state, OracleKind kind,
                                            const CompletedOp& op,
                                            std::span<const Edge> concurrent_adds);

/// True iff `order` is a permutation of ops that never places an op before
/// one that responded before it was invoked.
bool respects_real_time(std::span<const CompletedOp> ops, std::span<const std::size_t> order);

}  // namespace cgraph::lin
