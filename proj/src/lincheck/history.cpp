#include "cgraph/lincheck/history.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

namespace cgraph::lin {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
bool parse_int(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

void write_history(std::ostream& out, const History& h) {
  for (const Event& e : h.events) {
    out << e.seq << '\t' << e.thread << '\t' << (e.phase == Phase::Inv ? "inv" : "resp") << '\t'
        << method_name(e.op.method) << '\t' << e.op.u;
    if (arity(e.op.method) == 2) out << ',' << e.op.v;
    out << '\t';
    if (e.result) {
      out << (*e.result ? "true" : "false");
    } else {
      out << '-';
    }
    out << '\n';
  }
}

std::string format_history(const History& h) {
  std::ostringstream s;
  write_history(s, h);
  return s.str();
}

History read_history(std::istream& in) {
  History h;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 6) throw HistoryParseError(lineno, "expected 6 tab-separated fields");
    Event e;
    if (!parse_int(fields[0], e.seq)) throw HistoryParseError(lineno, "bad seq");
    if (!parse_int(fields[1], e.thread)) throw HistoryParseError(lineno, "bad thread");
    if (fields[2] == "inv") {
      e.phase = Phase::Inv;
    } else if (fields[2] == "resp") {
      e.phase = Phase::Resp;
    } else {
      throw HistoryParseError(lineno, "phase must be inv or resp");
    }
    auto m = parse_method(fields[3]);
    if (!m) throw HistoryParseError(lineno, "unknown method '" + std::string(fields[3]) + "'");
    e.op.method = *m;
    auto args = split(fields[4], ',');
    if (static_cast<int>(args.size()) != arity(*m)) {
      throw HistoryParseError(lineno, "wrong number of arguments");
    }
    if (!parse_int(args[0], e.op.u)) throw HistoryParseError(lineno, "bad argument");
    if (args.size() == 2 && !parse_int(args[1], e.op.v)) {
      throw HistoryParseError(lineno, "bad argument");
    }
    if (fields[5] == "true") {
      e.result = true;
    } else if (fields[5] == "false") {
      e.result = false;
    } else if (fields[5] != "-") {
      throw HistoryParseError(lineno, "result must be true, false or -");
    }
    h.events.push_back(e);
  }
  return h;
}

History parse_history(const std::string& text) {
  std::istringstream s(text);
  return read_history(s);
}

std::optional<std::string> well_formedness_error(const History& h) {
  std::map<std::uint32_t, const Event*> open;
  for (std::size_t i = 0; i < h.events.size(); ++i) {
    const Event& e = h.events[i];
    if (i > 0 && e.seq <= h.events[i - 1].seq) {
      return "seq not strictly increasing at event " + std::to_string(i);
    }
    auto it = open.find(e.thread);
    if (e.phase == Phase::Inv) {
      if (it != open.end()) return "thread " + std::to_string(e.thread) + " invokes twice";
      if (e.result) return "invocation with a result at seq " + std::to_string(e.seq);
      open.emplace(e.thread, &e);
    } else {
      if (it == open.end()) return "response without invocation at seq " + std::to_string(e.seq);
      if (!(it->second->op == e.op)) return "response does not match invocation at seq " + std::to_string(e.seq);
      if (!e.result) return "response without a result at seq " + std::to_string(e.seq);
      open.erase(it);
    }
  }
  return std::nullopt;
}

std::vector<CompletedOp> completed_ops(const History& h) {
  std::vector<CompletedOp> out;
  std::map<std::uint32_t, std::size_t> open;  // thread -> index into out
  std::vector<bool> done;
  for (const Event& e : h.events) {
    if (e.phase == Phase::Inv) {
      open[e.thread] = out.size();
      out.push_back(CompletedOp{e.thread, e.op, false, e.seq, 0});
      done.push_back(false);
    } else {
      auto it = open.find(e.thread);
      if (it == open.end()) continue;
      out[it->second].result = e.result.value_or(false);
      out[it->second].resp = e.seq;
      done[it->second] = true;
      open.erase(it);
    }
  }
  std::vector<CompletedOp> complete;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (done[i]) complete.push_back(out[i]);
  }
  return complete;
}

}  // namespace cgraph::lin
