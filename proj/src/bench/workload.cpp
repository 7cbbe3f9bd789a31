#include "cgraph/bench/workload.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cgraph::bench {
namespace {

std::array<unsigned, 6> cumulative(const WorkloadSpec& spec) {
  std::array<unsigned, 6> c{};
  std::partial_sum(spec.percent.begin(), spec.percent.end(), c.begin());
  return c;
}

Op draw(const std::array<unsigned, 6>& cum, std::mt19937_64& rng,
        std::uniform_int_distribution<unsigned>& percent,
        std::uniform_int_distribution<std::int64_t>& key) {
  const unsigned p = percent(rng);
  std::size_t i = 0;
  while (p >= cum[i]) ++i;
  Op op;
  op.method = kWorkloadMethods[i];
  op.u = key(rng);
  op.v = arity(op.method) == 2 ? key(rng) : 0;
  return op;
}

}  // namespace

void validate(const WorkloadSpec& spec) {
  const unsigned sum = std::accumulate(spec.percent.begin(), spec.percent.end(), 0U);
  if (sum != 100) {
    throw std::invalid_argument("workload percentages sum to " + std::to_string(sum) +
                                ", expected 100");
  }
}

NamedWorkload parse_workload(std::string_view text) {
  if (text == "update") return {"update", WorkloadSpec::update_dominated()};
  if (text == "contains") return {"contains", WorkloadSpec::contains_dominated()};
  if (text == "edges") return {"edges", WorkloadSpec::edge_updates()};
  constexpr std::string_view prefix = "custom:";
  if (!text.starts_with(prefix)) {
    throw std::invalid_argument("unknown workload '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(prefix.size());
  WorkloadSpec spec;
  std::size_t field = 0;
  for (;;) {
    const std::size_t comma = rest.find(',');
    std::string_view part = rest.substr(0, comma);
    if (field == 6) throw std::invalid_argument("custom workload needs exactly 6 percentages");
    unsigned value = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || p != part.data() + part.size()) {
      throw std::invalid_argument("bad percentage '" + std::string(part) + "' in custom workload");
    }
    spec.percent[field++] = value;
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (field != 6) throw std::invalid_argument("custom workload needs exactly 6 percentages");
  validate(spec);
  std::string name = "custom:";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i > 0) name += '/';
    name += std::to_string(spec.percent[i]);
  }
  return {name, spec};
}

std::size_t workload_index(Method m) noexcept {
  for (std::size_t i = 0; i < kWorkloadMethods.size(); ++i) {
    if (kWorkloadMethods[i] == m) return i;
  }
  return kWorkloadMethods.size();
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  // SplitMix64 finalizer applied to base + stream * golden gamma.
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

OpSampler::OpSampler(const WorkloadSpec& spec, std::int64_t key_range, std::uint64_t seed)
    : cumulative_(cumulative(spec)), rng_(seed), key_(1, key_range) {
  validate(spec);
  if (key_range < 1) throw std::invalid_argument("key range must be at least 1");
}

Op OpSampler::next() { return draw(cumulative_, rng_, percent_, key_); }

Op sample_op(const WorkloadSpec& spec, std::int64_t key_range, std::mt19937_64& rng) {
  validate(spec);
  std::uniform_int_distribution<unsigned> percent(0, 99);
  std::uniform_int_distribution<std::int64_t> key(1, key_range);
  return draw(cumulative(spec), rng, percent, key);
}

}  // namespace cgraph::bench
