#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgraph/bench/bench.hpp"

namespace cgraph::bench {

inline constexpr std::string_view kCsvHeader =
    "backend,workload,threads,duration_s,initial_vertices,key_range,die,acyclic,seed,total_ops,"
    "throughput_ops_per_s";

/// One parsed CSV row.
struct CsvRow {
  std::string backend;
  std::string workload;
  unsigned threads = 0;
  double duration_s = 0;
  unsigned initial_vertices = 0;
  std::int64_t key_range = 0;
  bool die = false;
  bool acyclic = false;
  std::uint64_t seed = 0;
  std::uint64_t total_ops = 0;
  double throughput_ops_per_s = 0;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

CsvRow to_row(const BenchResult& r);
std::string format_row(const CsvRow& row);

/// Header plus one line per result.
std::string format_csv(std::span<const BenchResult> results);

/// Writes format_csv to `path`. Throws std::runtime_error naming the path.
void emit_csv(std::span<const BenchResult> results, const std::filesystem::path& path);

/// Throws std::runtime_error with the offending line number.
std::vector<CsvRow> parse_csv(std::string_view text);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

}  // namespace cgraph::bench
