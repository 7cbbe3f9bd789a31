#include <gtest/gtest.h>

#include <random>
#include <set>
#include <thread>
#include <vector>

#include "brute_force.hpp"
#include "cgraph/concurrent_set.hpp"
#include "cgraph/graph.hpp"
#include "cgraph/lincheck/checker.hpp"
#include "cgraph/lincheck/harness.hpp"
#include "cgraph/lincheck/recorder.hpp"
#include "schedule_explorer.hpp"

namespace cgraph {
namespace {

template <class B>
class SetList : public ::testing::Test {};
using Backends = ::testing::Types<CoarseBackend, HohBackend, LazyBackend, LockFreeBackend>;
TYPED_TEST_SUITE(SetList, Backends);

TYPED_TEST(SetList, AddToEmpty) {
  ConcurrentSet<TypeParam> s;
  EXPECT_EQ(s.add(5), AddOutcome::Inserted);
  EXPECT_EQ(s.keys(), std::vector<Key>{5});
}

TYPED_TEST(SetList, AddDuplicate) {
  ConcurrentSet<TypeParam> s;
  s.add(5);
  EXPECT_EQ(s.add(5), AddOutcome::AlreadyPresent);
  EXPECT_EQ(s.linked_keys(), std::vector<Key>{5});
}

TYPED_TEST(SetList, RemovePresentAndAbsent) {
  ConcurrentSet<TypeParam> s;
  s.add(5);
  EXPECT_TRUE(s.remove(5));
  EXPECT_TRUE(s.keys().empty());
  EXPECT_FALSE(s.remove(5));
}

TYPED_TEST(SetList, ContainsReturnsHandle) {
  ConcurrentSet<TypeParam> s;
  EXPECT_FALSE(s.contains(5));
  s.add(5);
  auto* n = s.find(5);
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->val, 5);
}

TYPED_TEST(SetList, LocateBrackets) {
  ConcurrentSet<TypeParam> s;
  s.add(3);
  s.add(7);
  {
    auto w = s.locate(5);
    EXPECT_EQ(w.pred->val, 3);
    EXPECT_EQ(w.curr->val, 7);
  }
  ConcurrentSet<TypeParam> t;
  t.add(5);
  auto w = t.locate(5);
  EXPECT_EQ(w.pred, t.head());
  EXPECT_EQ(w.curr->val, 5);
}

TYPED_TEST(SetList, ConcurrentDisjointAdds) {
  ConcurrentSet<TypeParam> s;
  {
    std::vector<std::jthread> ts;
    for (Key k : {3, 7, 1}) ts.emplace_back([&s, k] { s.add(k); });
  }
  EXPECT_EQ(s.keys(), (std::vector<Key>{1, 3, 7}));
  EXPECT_TRUE(s.well_formed());
}

TYPED_TEST(SetList, ConcurrentRemoveExactlyOneWins) {
  for (int trial = 0; trial < 200; ++trial) {
    ConcurrentSet<TypeParam> s;
    s.add(5);
    std::atomic<int> wins{0};
    {
      std::vector<std::jthread> ts;
      for (int i = 0; i < 2; ++i) ts.emplace_back([&] { wins += s.remove(5) ? 1 : 0; });
    }
    ASSERT_EQ(wins.load(), 1);
  }
}

TYPED_TEST(SetList, ConcurrentRemoveEveryScheduleLinearizes) {
  std::set<std::pair<bool, bool>> outcomes;
  std::unique_ptr<ConcurrentSet<TypeParam>> s;
  std::unique_ptr<lin::Recorder> rec;
  bool r[2] = {false, false};
  auto stats = testing::explore_schedules([&] {
    s = std::make_unique<ConcurrentSet<TypeParam>>();
    rec = std::make_unique<lin::Recorder>(3);
    rec->record(0, {Method::SetAdd, 5, 0}, [&] { return s->add(5) == AddOutcome::Inserted; });
    testing::Execution e;
    for (int t = 0; t < 2; ++t) {
      e.threads.push_back([&, t] {
        r[t] = rec->record(t + 1, {Method::SetRemove, 5, 0}, [&] { return s->remove(5); });
      });
    }
    e.after = [&] {
      outcomes.insert({r[0], r[1]});
      EXPECT_NE(r[0], r[1]);
      EXPECT_TRUE(lin::check_linearizable(rec->merged(), OracleKind::Set).linearizable());
      EXPECT_TRUE(s->keys().empty());
    };
    return e;
  });
  EXPECT_TRUE(stats.exhausted);
  EXPECT_GT(stats.schedules, 1U);
  EXPECT_EQ(outcomes.size(), 2U);
}

TYPED_TEST(SetList, StressKeepsSortedLinksAndMarksBeforeUnlink) {
  ConcurrentSet<TypeParam> s;
  instr::unmarked_unlinks.store(0);
  {
    std::vector<std::jthread> ts;
    for (int t = 0; t < 4; ++t) {
      ts.emplace_back([&s, t] {
        std::mt19937_64 rng(t);
        std::uniform_int_distribution<Key> k(1, 32);
        std::uniform_int_distribution<int> m(0, 2);
        for (int i = 0; i < 20000; ++i) {
          switch (m(rng)) {
            case 0: s.add(k(rng)); break;
            case 1: s.remove(k(rng)); break;
            default: s.contains(k(rng)); break;
          }
          if (i % 64 == 0) std::this_thread::yield();
        }
      });
    }
  }
  EXPECT_TRUE(s.well_formed());
  EXPECT_EQ(instr::unmarked_unlinks.load(), 0U);
  const auto keys = s.keys();
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TYPED_TEST(SetList, RecordedHistoriesLinearize) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    ConcurrentSet<TypeParam> s;
    lin::HarnessConfig cfg;
    cfg.threads = 2 + seed % 3;
    cfg.ops_per_thread = 12 / cfg.threads;
    cfg.seed = seed;
    const auto apply = [&s](const Op& op) {
      switch (op.method) {
        case Method::SetAdd: return s.add(op.u) == AddOutcome::Inserted;
        case Method::SetRemove: return s.remove(op.u);
        default: return s.contains(op.u);
      }
    };
    const lin::OpSource source = [](std::uint32_t, std::size_t, std::mt19937_64& rng) {
      std::uniform_int_distribution<int> m(0, 2);
      std::uniform_int_distribution<Key> k(1, 4);
      const Method methods[] = {Method::SetAdd, Method::SetRemove, Method::SetContains};
      return Op{methods[m(rng)], k(rng), 0};
    };
    const std::vector<Op> setup{{Method::SetAdd, 1, 0}, {Method::SetAdd, 3, 0}};
    const auto h = lin::record_concurrent(apply, setup, source, cfg);
    ASSERT_FALSE(lin::well_formedness_error(h).has_value());
    ASSERT_TRUE(lin::check_linearizable(h, OracleKind::Set).linearizable()) << lin::format_history(h);
  }
}

TYPED_TEST(SetList, SequentialEquivalenceAcrossBackends) {
  ConcurrentSet<TypeParam> s;
  ConcurrentSet<LazyBackend> reference;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Key> k(1, 20);
  std::uniform_int_distribution<int> m(0, 2);
  for (int i = 0; i < 5000; ++i) {
    const Key key = k(rng);
    switch (m(rng)) {
      case 0: ASSERT_EQ(s.add(key), reference.add(key)); break;
      case 1: ASSERT_EQ(s.remove(key), reference.remove(key)); break;
      default: ASSERT_EQ(s.contains(key), reference.contains(key)); break;
    }
  }
  EXPECT_EQ(s.keys(), reference.keys());
}

// ---- backend specifics ----

TEST(LazyList, ContainsSkipsMarkedLinkedNode) {
  ConcurrentSet<LazyBackend> s;
  s.add(5);
  s.find(5)->marked.store(true);
  EXPECT_FALSE(s.contains(5));
}

TEST(LazyList, ContainsTakesNoLocks) {
  ConcurrentSet<LazyBackend> s;
  for (Key k = 1; k <= 10; ++k) s.add(k);
  instr::reset();
  for (Key k = 0; k <= 12; ++k) s.contains(k + 1);
  EXPECT_EQ(instr::counters().lock_acquisitions, 0U);
  EXPECT_EQ(instr::counters().shared_writes, 0U);
}

TEST(LazyList, RemoveMarksThenUnlinks) {
  ConcurrentSet<LazyBackend> s;
  s.add(5);
  LockedNode* n = s.find(5);
  instr::unmarked_unlinks.store(0);
  EXPECT_TRUE(s.remove(5));
  EXPECT_TRUE(n->marked.load());
  EXPECT_EQ(instr::unmarked_unlinks.load(), 0U);
  EXPECT_TRUE(s.linked_keys().empty());
}

TEST(HohList, ContainsCouplesLocks) {
  ConcurrentSet<HohBackend> s;
  for (Key k = 1; k <= 3; ++k) s.add(k);
  instr::reset();
  s.contains(3);
  // head, 1, 2, 3: one lock per visited node.
  EXPECT_EQ(instr::counters().lock_acquisitions, 4U);
}

TEST(CoarseList, OneLockPerOperation) {
  ConcurrentSet<CoarseBackend> s;
  for (Key k = 1; k <= 10; ++k) s.add(k);
  instr::reset();
  s.contains(10);
  s.remove(4);
  EXPECT_EQ(instr::counters().lock_acquisitions, 2U);
}

TEST(LockFreeList, ContainsIgnoresMarkedNode) {
  ConcurrentSet<LockFreeBackend> s;
  s.add(5);
  s.find(5)->enext.fetch_or(1);
  EXPECT_FALSE(s.contains(5));
}

TEST(LockFreeList, LocateSnipsMarkedNodes) {
  ConcurrentSet<LockFreeBackend> s;
  for (Key k : {2, 4, 6}) s.add(k);
  s.find(4)->enext.fetch_or(1);
  EXPECT_EQ(s.linked_keys(), (std::vector<Key>{2, 4, 6}));
  auto w = s.locate(5);
  EXPECT_EQ(w.pred->val, 2);
  EXPECT_EQ(w.curr->val, 6);
  EXPECT_EQ(s.linked_keys(), (std::vector<Key>{2, 6}));
  EXPECT_EQ(s.keys(), (std::vector<Key>{2, 6}));
}

TEST(LockFreeList, ContainsIsReadOnly) {
  ConcurrentSet<LockFreeBackend> s;
  for (Key k = 1; k <= 10; ++k) s.add(k);
  s.find(4)->enext.fetch_or(1);  // leave a marked node for contains to walk over
  instr::reset();
  for (Key k = 1; k <= 12; ++k) s.contains(k);
  EXPECT_EQ(instr::counters().lock_acquisitions, 0U);
  EXPECT_EQ(instr::counters().shared_writes, 0U);
  EXPECT_EQ(s.linked_keys().size(), 10U);  // nothing snipped
}

TEST(LockFreeList, ContainsUnderConcurrentUpdatesIsReadOnly) {
  ConcurrentSet<LockFreeBackend> s;
  std::atomic<bool> stop{false};
  std::jthread mutator([&] {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Key> k(1, 16);
    while (!stop.load()) {
      s.add(k(rng));
      s.remove(k(rng));
    }
  });
  instr::reset();
  for (int i = 0; i < 20000; ++i) {
    s.contains(1 + i % 16);
    if (i % 100 == 0) std::this_thread::yield();
  }
  stop.store(true);
  EXPECT_EQ(instr::counters().lock_acquisitions, 0U);
  EXPECT_EQ(instr::counters().shared_writes, 0U);
}

TEST(LockFreeList, RemoveMarksBeforePhysicalUnlink) {
  instr::unmarked_unlinks.store(0);
  ConcurrentSet<LockFreeBackend> s;
  s.add(5);
  LfNode* n = s.find(5);
  EXPECT_TRUE(s.remove(5));
  EXPECT_TRUE(LockFreeBackend::mark_bit(n->enext.load()));
  EXPECT_TRUE(s.linked_keys().empty());
}

TEST(LinkSelector, VertexAndEdgeLinksAreIndependent) {
  LazyBackend b;
  LockedNode* vh = b.make_list<Link::Vertex>();
  b.add<Link::Vertex>(vh, 4, nullptr);
  LockedNode* v4 = b.contains<Link::Vertex>(vh, 4);
  ASSERT_NE(v4, nullptr);
  LockedNode* eh = LazyBackend::edge_head(v4);
  b.add<Link::Edge>(eh, 2, nullptr);
  EXPECT_NE(b.contains<Link::Edge>(eh, 2), nullptr);
  EXPECT_EQ(b.contains<Link::Vertex>(vh, 2), nullptr);
  EXPECT_EQ(b.contains<Link::Edge>(eh, 4), nullptr);
}

}  // namespace
}  // namespace cgraph
