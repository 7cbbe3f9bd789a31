#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgraph/op.hpp"

namespace cgraph::lin {

enum class Phase : std::uint8_t { Inv, Resp };

struct Event {
  std::uint64_t seq = 0;
  std::uint32_t thread = 0;
  Phase phase = Phase::Inv;
  Op op;
  std::optional<bool> result;  // responses only

  friend bool operator==(const Event&, const Event&) = default;
};

/// Events in seq order.
struct History {
  std::vector<Event> events;

  friend bool operator==(const History&, const History&) = default;
};

/// A matched invocation/response pair.
struct CompletedOp {
  std::uint32_t thread = 0;
  Op op;
  bool result = false;
  std::uint64_t inv = 0;
  std::uint64_t resp = 0;
};

class HistoryParseError : public std::runtime_error {
 public:
  HistoryParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One line per event: seq, thread, phase, method, args, result|- separated by tabs.
void write_history(std::ostream& out, const History& h);
std::string format_history(const History& h);

/// Throws HistoryParseError on malformed input.
History read_history(std::istream& in);
History parse_history(const std::string& text);

/// Empty if every thread alternates inv/resp with matching ops, responses
/// carry results, and seq strictly increases. Otherwise a description.
std::optional<std::string> well_formedness_error(const History& h);

/// Matched pairs in invocation order. Pending invocations are discarded.
std::vector<CompletedOp> completed_ops(const History& h);

}  // namespace cgraph::lin
