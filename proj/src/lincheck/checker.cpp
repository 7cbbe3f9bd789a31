#include "cgraph/lincheck/checker.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace cgraph::lin {
namespace {

class Search {
 public:
  Search(std::span<const CompletedOp> ops, OracleKind kind, CheckOptions options)
      : ops_(ops), kind_(kind), options_(options), before_(ops.size(), 0), concurrent_(ops.size()) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = 0; j < ops.size(); ++j) {
        if (ops[j].resp < ops[i].inv) before_[i] |= std::uint64_t{1} << j;
      }
      if (kind == OracleKind::AcyclicGraph && ops[i].op.method == Method::AcyclicAddEdge &&
          !ops[i].result) {
        concurrent_[i] = overlapping_acyclic_adds(ops, i);
      }
    }
    all_ = ops.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ops.size()) - 1;
  }

  CheckResult run() {
    CheckResult r;
    const bool ok = dfs(0, AbstractGraph{});
    r.states = states_;
    if (ok) {
      r.verdict = Verdict::Linearizable;
      r.witness = path_;
    } else {
      r.verdict = exhausted_ ? Verdict::BudgetExhausted : Verdict::NotLinearizable;
    }
    return r;
  }

 private:
  bool dfs(std::uint64_t done, const AbstractGraph& state) {
    if (done == all_) return true;
    if (++states_ > options_.budget) {
      exhausted_ = true;
      return false;
    }
    if (!visited_.emplace(done, state).second) return false;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((done & bit) != 0 || (before_[i] & ~done) != 0) continue;
      auto next = linearize_step(state, kind_, ops_[i], concurrent_[i]);
      if (!next) continue;
      path_.push_back(i);
      if (dfs(done | bit, *next)) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  std::span<const CompletedOp> ops_;
  OracleKind kind_;
  CheckOptions options_;
  std::vector<std::uint64_t> before_;  // ops that must precede op i
  std::vector<std::vector<Edge>> concurrent_;
  std::uint64_t all_ = 0;
  std::uint64_t states_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> path_;
  std::set<std::pair<std::uint64_t, AbstractGraph>> visited_;
};

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Linearizable: return "linearizable";
    case Verdict::NotLinearizable: return "not linearizable";
    case Verdict::BudgetExhausted: return "budget exhausted";
  }
  return "?";
}

std::vector<Edge> overlapping_acyclic_adds(std::span<const CompletedOp> ops, std::size_t i) {
  std::vector<Edge> out;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (j == i || ops[j].op.method != Method::AcyclicAddEdge) continue;
    const bool disjoint = ops[j].resp < ops[i].inv || ops[i].resp < ops[j].inv;
    if (!disjoint) out.emplace_back(ops[j].op.u, ops[j].op.v);
  }
  return out;
}

std::optional<AbstractGraph> linearize_step(const AbstractGraph& state, OracleKind kind,
                                            const CompletedOp& op,
                                            std::span<const Edge> concurrent_adds) {
  if (kind == OracleKind::AcyclicGraph && op.op.method == Method::AcyclicAddEdge && !op.result) {
    const Key u = op.op.u;
    const Key v = op.op.v;
    if (!state.has_vertex(u) || !state.has_vertex(v)) return state;
    if (state.has_edge(u, v)) return std::nullopt;
    std::set<Edge> extended = state.edges;
    extended.insert(concurrent_adds.begin(), concurrent_adds.end());
    extended.insert({u, v});
    if (has_path(extended, v, u)) return state;
    return std::nullopt;
  }
  SeqGraphOracle oracle(kind, state);
  if (oracle.apply(op.op) != op.result) return std::nullopt;
  return oracle.state();
}

CheckResult check_linearizable(std::span<const CompletedOp> ops, OracleKind kind,
                               CheckOptions options) {
  if (ops.size() > kMaxOps) {
    throw std::invalid_argument("history has " + std::to_string(ops.size()) +
                                " operations; the checker accepts at most 64");
  }
  for (const CompletedOp& op : ops) {
    if (!accepts(kind, op.op.method)) {
      throw std::invalid_argument(std::string(method_name(op.op.method)) + " is not a " +
                                  std::string(to_string(kind)) + " method");
    }
  }
  return Search(ops, kind, options).run();
}

CheckResult check_linearizable(const History& h, OracleKind kind, CheckOptions options) {
  if (auto err = well_formedness_error(h)) throw std::invalid_argument("ill-formed history: " + *err);
  const std::vector<CompletedOp> ops = completed_ops(h);
  return check_linearizable(std::span<const CompletedOp>(ops), kind, options);
}

bool respects_real_time(std::span<const CompletedOp> ops, std::span<const std::size_t> order) {
  if (order.size() != ops.size()) return false;
  std::vector<std::size_t> pos(ops.size(), ops.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= ops.size() || pos[order[k]] != ops.size()) return false;
    pos[order[k]] = k;
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (ops[i].resp < ops[j].inv && pos[i] > pos[j]) return false;
    }
  }
  return true;
}

}  // namespace cgraph::lin
