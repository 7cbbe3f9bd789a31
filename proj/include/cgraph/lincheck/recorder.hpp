#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

#include "cgraph/lincheck/history.hpp"

namespace cgraph::lin {

/// Concurrent event recorder: one shared seq counter, one buffer per thread.
/// Each thread id may be used by one thread at a time.
class Recorder {
 public:
  explicit Recorder(std::size_t threads) : buffers_(threads) {}

  /// Records inv, runs `fn` (returning bool), records resp, returns the result.
  template <class Fn>
  bool record(std::uint32_t thread, const Op& op, Fn&& fn) {
    auto& buf = buffers_.at(thread).events;
    buf.push_back(Event{next_seq(), thread, Phase::Inv, op, std::nullopt});
    const bool r = fn();
    buf.push_back(Event{next_seq(), thread, Phase::Resp, op, r});
    return r;
  }

  /// Records an invocation that never responds.
  void record_pending(std::uint32_t thread, const Op& op) {
    buffers_.at(thread).events.push_back(Event{next_seq(), thread, Phase::Inv, op, std::nullopt});
  }

  /// All events sorted by seq. Call once all recording threads have stopped.
  History merged() const {
    History h;
    for (const auto& b : buffers_) h.events.insert(h.events.end(), b.events.begin(), b.events.end());
    std::sort(h.events.begin(), h.events.end(),
              [](const Event& a, const Event& b) { return a.seq < b.seq; });
    return h;
  }

 private:
  struct alignas(64) Buffer {
    std::vector<Event> events;
  };

  std::uint64_t next_seq() noexcept { return seq_.fetch_add(1, std::memory_order_acq_rel); }

  std::atomic<std::uint64_t> seq_{0};
  std::vector<Buffer> buffers_;
};

}  // namespace cgraph::lin
