#pragma once

#include <atomic>
#include <cstdint>

namespace cgraph::instr {

/// Per-thread event counters. Only the owning thread reads or writes them.
struct Counters {
  std::uint64_t lock_acquisitions = 0;
  std::uint64_t shared_writes = 0;
  std::uint64_t traversal_steps = 0;
};

inline thread_local Counters tls_counters;

inline Counters& counters() noexcept { return tls_counters; }
inline void reset() noexcept { tls_counters = {}; }

inline void count_step() noexcept { ++tls_counters.traversal_steps; }
inline void count_write() noexcept { ++tls_counters.shared_writes; }
inline void count_lock() noexcept { ++tls_counters.lock_acquisitions; }

/// Physical unlinks of a node that had not been marked first. Must stay zero.
inline std::atomic<std::uint64_t> unmarked_unlinks{0};

/// Edge status writes that break transit -> (added | marked) -> marked.
inline std::atomic<std::uint64_t> illegal_status_transitions{0};

}  // namespace cgraph::instr

namespace cgraph::sched {

/// Named points where a test scheduler may take control of a thread.
enum class Site : std::uint8_t {
  LockSpin,             // try_lock failed; the thread cannot proceed by itself
  Retry,                // validation failed or waiting on another thread's transit edge
  LocateLocked,         // list locate returned with its window locked
  EdgeOpSourceChecked,  // graph edge op: first contains(u) done
  EdgeLocateVertices,   // acyclic locate: both vertices found
  EdgeTraversed,        // acyclic locate: edge window found, not yet locked
  EdgeLocateLocked,     // acyclic locate: edge window locked and validated
  TransitLinked,        // transit edge linked, locks released
  ReachExpand,          // path_exists expanded one vertex
  StatusResolve,        // cycle check done, status write next
  RollbackLocked,       // new_locate_edge window locked and validated
};

class YieldHook {
 public:
  virtual ~YieldHook() = default;
  virtual void on_point(Site site) = 0;
};

inline std::atomic<YieldHook*> active_hook{nullptr};

inline void point(Site site) {
  if (YieldHook* h = active_hook.load(std::memory_order_acquire)) h->on_point(site);
}

/// Installs a hook for the lifetime of the object.
class ScopedHook {
 public:
  explicit ScopedHook(YieldHook* hook)
      : previous_(active_hook.exchange(hook, std::memory_order_acq_rel)) {}
  ~ScopedHook() { active_hook.store(previous_, std::memory_order_release); }
  ScopedHook(const ScopedHook&) = delete;
  ScopedHook& operator=(const ScopedHook&) = delete;

 private:
  YieldHook* previous_;
};

/// Lock with instrumentation. Under a hook, spins on try_lock so the
/// scheduler sees every failed attempt.
template <class Mutex>
void acquire(Mutex& m) {
  instr::count_lock();
  if (active_hook.load(std::memory_order_relaxed) == nullptr) {
    m.lock();
    return;
  }
  while (!m.try_lock()) point(Site::LockSpin);
}

}  // namespace cgraph::sched
