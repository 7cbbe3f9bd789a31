#include "cgraph/bench/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cgraph::bench {
namespace {

std::string shortest(double x) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), p);
}

template <class T>
T parse_field(std::string_view s, std::size_t line, std::string_view column) {
  T value{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad " + std::string(column) +
                             " '" + std::string(s) + "'");
  }
  return value;
}

bool parse_flag(std::string_view s, std::size_t line, std::string_view column) {
  if (s == "0") return false;
  if (s == "1") return true;
  throw std::runtime_error("line " + std::to_string(line) + ": bad " + std::string(column) +
                           " '" + std::string(s) + "'");
}

}  // namespace

CsvRow to_row(const BenchResult& r) {
  const BenchConfig& c = r.config;
  return CsvRow{std::string(to_string(c.backend)),
                c.workload.name,
                c.threads,
                c.duration_s,
                c.initial_vertices,
                c.key_range,
                c.die,
                c.acyclic,
                c.seed,
                r.total_ops,
                r.throughput};
}

std::string format_row(const CsvRow& r) {
  std::string s;
  s += r.backend + ',' + r.workload + ',' + std::to_string(r.threads) + ',' + shortest(r.duration_s) +
       ',' + std::to_string(r.initial_vertices) + ',' + std::to_string(r.key_range) + ',' +
       (r.die ? '1' : '0') + ',' + (r.acyclic ? '1' : '0') + ',' + std::to_string(r.seed) + ',' +
       std::to_string(r.total_ops) + ',' + shortest(r.throughput_ops_per_s);
  return s;
}

std::string format_csv(std::span<const BenchResult> results) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : results) {
    out += format_row(to_row(r));
    out += '\n';
  }
  return out;
}

void emit_csv(std::span<const BenchResult> results, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << format_csv(results);
  f.flush();
  if (!f) throw std::runtime_error("write to " + path.string() + " failed");
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != kCsvHeader) throw std::runtime_error("line 1: unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (;;) {
      const std::size_t comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (f.size() != 11) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 11 columns, got " +
                               std::to_string(f.size()));
    }
    CsvRow r;
    r.backend = std::string(f[0]);
    r.workload = std::string(f[1]);
    r.threads = parse_field<unsigned>(f[2], lineno, "threads");
    r.duration_s = parse_field<double>(f[3], lineno, "duration_s");
    r.initial_vertices = parse_field<unsigned>(f[4], lineno, "initial_vertices");
    r.key_range = parse_field<std::int64_t>(f[5], lineno, "key_range");
    r.die = parse_flag(f[6], lineno, "die");
    r.acyclic = parse_flag(f[7], lineno, "acyclic");
    r.seed = parse_field<std::uint64_t>(f[8], lineno, "seed");
    r.total_ops = parse_field<std::uint64_t>(f[9], lineno, "total_ops");
    r.throughput_ops_per_s = parse_field<double>(f[10], lineno, "throughput_ops_per_s");
    rows.push_back(std::move(r));
  }
  if (lineno == 0) throw std::runtime_error("line 1: missing CSV header");
  return rows;
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  try {
    return parse_csv(s.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace cgraph::bench
