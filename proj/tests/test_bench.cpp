#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <unistd.h>

#include "cgraph/abstract_graph.hpp"
#include "cgraph/bench/bench.hpp"
#include "cgraph/bench/csv.hpp"
#include "cgraph/bench/workload.hpp"

namespace cgraph::bench {
namespace {

std::array<double, 6> frequencies(const WorkloadSpec& spec, std::size_t n, std::uint64_t seed) {
  OpSampler s(spec, 64, seed);
  std::array<std::size_t, 6> counts{};
  for (std::size_t i = 0; i < n; ++i) ++counts[workload_index(s.next().method)];
  std::array<double, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = 100.0 * static_cast<double>(counts[i]) / static_cast<double>(n);
  return out;
}

TEST(Workload, AllAddVertex) {
  OpSampler s({{100, 0, 0, 0, 0, 0}}, 10, 1);
  for (int i = 0; i < 1000; ++i) {
    const Op op = s.next();
    EXPECT_EQ(op.method, Method::AddVertex);
    EXPECT_GE(op.u, 1);
    EXPECT_LE(op.u, 10);
  }
}

TEST(Workload, NamedFrequenciesWithinHalfPercent) {
  for (const auto& spec :
       {WorkloadSpec::update_dominated(), WorkloadSpec::contains_dominated(), WorkloadSpec::edge_updates()}) {
    const auto f = frequencies(spec, 1'000'000, 7);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(f[i], spec.percent[i], 0.5) << i;
  }
}

TEST(Workload, KeysCoverRangeUniformly) {
  OpSampler s(WorkloadSpec::edge_updates(), 4, 3);
  std::array<int, 5> counts{};
  for (int i = 0; i < 40000; ++i) {
    const Op op = s.next();
    ASSERT_GE(op.u, 1);
    ASSERT_LE(op.v, 4);
    ++counts[op.u];
  }
  EXPECT_EQ(counts[0], 0);
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(counts[k], 10000, 400);
}

TEST(Workload, SameSeedSameStream) {
  OpSampler a(WorkloadSpec::update_dominated(), 64, 99);
  OpSampler b(WorkloadSpec::update_dominated(), 64, 99);
  OpSampler c(WorkloadSpec::update_dominated(), 64, 100);
  std::mt19937_64 rng(99);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const Op x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_EQ(x, sample_op(WorkloadSpec::update_dominated(), 64, rng));
    differs |= !(x == c.next());
  }
  EXPECT_TRUE(differs);
}

TEST(Workload, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 100; ++s) seeds.insert(derive_seed(42, s));
  EXPECT_EQ(seeds.size(), 100U);
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}

TEST(Workload, Parse) {
  EXPECT_EQ(parse_workload("update").spec, WorkloadSpec::update_dominated());
  EXPECT_EQ(parse_workload("contains").spec, WorkloadSpec::contains_dominated());
  EXPECT_EQ(parse_workload("edges").spec, WorkloadSpec::edge_updates());
  const auto custom = parse_workload("custom:10,10,30,10,10,30");
  EXPECT_EQ(custom.spec, (WorkloadSpec{{10, 10, 30, 10, 10, 30}}));
  EXPECT_EQ(custom.name, "custom:10/10/30/10/10/30");
  for (const char* bad : {"mixed", "custom:50,50", "custom:50,50,0,0,0,0,0", "custom:50,51,0,0,0,0",
                          "custom:50,50,-1,1,0,0", "custom:a,b,c,d,e,f", ""}) {
    EXPECT_THROW(parse_workload(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(validate(WorkloadSpec{{10, 10, 10, 10, 10, 10}}), std::invalid_argument);
}

TEST(BenchConfig, ValidationErrors) {
  const auto invalid = [](auto edit) {
    BenchConfig cfg;
    edit(cfg);
    EXPECT_THROW(validate(cfg), std::invalid_argument);
  };
  EXPECT_NO_THROW(validate(BenchConfig{}));
  invalid([](BenchConfig& c) { c.threads = 0; });
  invalid([](BenchConfig& c) { c.duration_s = 0; });
  invalid([](BenchConfig& c) { c.duration_s = -1; });
  invalid([](BenchConfig& c) { c.initial_vertices = 65; });
  invalid([](BenchConfig& c) { c.repeats = 0; });
  invalid([](BenchConfig& c) {
    c.acyclic = true;
    c.backend = BackendKind::Hoh;
  });
  invalid([](BenchConfig& c) {
    c.acyclic = true;
    c.die = true;
  });
  EXPECT_THROW(run_bench([] {
                 BenchConfig c;
                 c.threads = 0;
                 return c;
               }()),
               std::invalid_argument);
}

TEST(Prepopulate, CompleteGraph) {
  auto g = make_graph(BackendKind::Lazy);
  prepopulate(*g, 4);
  const AbstractGraph s = g->snapshot();
  EXPECT_EQ(s.vertices, (std::set<Key>{1, 2, 3, 4}));
  EXPECT_EQ(s.edges.size(), 12U);
  EXPECT_FALSE(s.edges.contains({2, 2}));

  auto a = make_acyclic_graph();
  prepopulate(*a, 4);
  const AbstractGraph t = a->snapshot();
  EXPECT_EQ(t.edges.size(), 6U);
  EXPECT_TRUE(is_acyclic(t.edges));
}

TEST(RunOnce, CoarseSmoke) {
  BenchConfig cfg;
  cfg.backend = BackendKind::Coarse;
  cfg.duration_s = 1.0;
  const BenchResult r = run_once(cfg, 0);
  EXPECT_GT(r.total_ops, 0U);
  EXPECT_GT(r.throughput, 0.0);
  EXPECT_EQ(std::accumulate(r.per_method.begin(), r.per_method.end(), std::uint64_t{0}), r.total_ops);
  EXPECT_DOUBLE_EQ(r.throughput, static_cast<double>(r.total_ops) / r.elapsed_s);
  EXPECT_NEAR(r.elapsed_s, 1.0, 0.25);
  EXPECT_TRUE(r.well_formed);
}

TEST(RunOnce, PerMethodCountsFollowWorkload) {
  BenchConfig cfg;
  cfg.workload = parse_workload("edges");
  cfg.duration_s = 0.3;
  const BenchResult r = run_once(cfg, 0);
  EXPECT_EQ(r.per_method[workload_index(Method::AddVertex)], 0U);
  EXPECT_EQ(r.per_method[workload_index(Method::ContainsEdge)], 0U);
  EXPECT_GT(r.per_method[workload_index(Method::AddEdge)], 0U);
}

TEST(RunOnce, AcyclicEdgesStayAcyclic) {
  BenchConfig cfg;
  cfg.acyclic = true;
  cfg.workload = parse_workload("edges");
  cfg.threads = 4;
  cfg.duration_s = 0.5;
  bool checked = false;
  RunHooks hooks;
  hooks.at_end = [&](const GraphInterface& g) {
    EXPECT_TRUE(g.acyclic());
    EXPECT_TRUE(is_acyclic(g.snapshot().edges));
    checked = true;
  };
  const BenchResult r = run_once(cfg, 0, hooks);
  EXPECT_TRUE(checked);
  EXPECT_TRUE(r.well_formed);
}

TEST(RunOnce, WellFormedForEveryConfiguration) {
  for (auto kind : {BackendKind::Coarse, BackendKind::Hoh, BackendKind::Lazy, BackendKind::LockFree}) {
    for (bool die : {false, true}) {
      for (const char* w : {"update", "contains", "edges"}) {
        BenchConfig cfg;
        cfg.backend = kind;
        cfg.die = die;
        cfg.workload = parse_workload(w);
        cfg.threads = 3;
        cfg.duration_s = 0.05;
        cfg.initial_vertices = 8;
        cfg.key_range = 16;
        EXPECT_TRUE(run_once(cfg, 0).well_formed) << to_string(kind) << " " << w << " die=" << die;
      }
    }
  }
}

TEST(RunOnce, CheckpointsPauseAllWorkers) {
  BenchConfig cfg;
  cfg.threads = 3;
  cfg.duration_s = 0.5;
  std::vector<unsigned> seen;
  RunHooks hooks;
  hooks.checkpoints = 5;
  hooks.at_checkpoint = [&](const GraphInterface& g, unsigned idx) {
    seen.push_back(idx);
    EXPECT_TRUE(g.well_formed());
    EXPECT_TRUE(g.snapshot().closed());
  };
  const BenchResult r = run_once(cfg, 0, hooks);
  EXPECT_EQ(seen, (std::vector<unsigned>{0, 1, 2, 3, 4}));
  EXPECT_NEAR(r.elapsed_s, 0.5, 0.2);
}

TEST(RunBench, AveragesRepeats) {
  BenchConfig cfg;
  cfg.duration_s = 0.1;
  cfg.repeats = 3;
  const BenchSummary s = run_bench(cfg);
  ASSERT_EQ(s.repeats.size(), 3U);
  double sum = 0;
  for (unsigned i = 0; i < 3; ++i) {
    EXPECT_EQ(s.repeats[i].repeat, i);
    sum += s.repeats[i].throughput;
  }
  EXPECT_DOUBLE_EQ(s.mean_throughput, sum / 3);
}

BenchResult fake_result(BackendKind kind, unsigned threads, std::uint64_t ops, double tput) {
  BenchResult r;
  r.config.backend = kind;
  r.config.threads = threads;
  r.config.workload = parse_workload("custom:10,10,30,10,10,30");
  r.config.duration_s = 0.1;
  r.total_ops = ops;
  r.throughput = tput;
  return r;
}

class CsvTest : public ::testing::Test {
 protected:
  std::filesystem::path dir_ = std::filesystem::temp_directory_path() /
                               ("cgraph_csv_" + std::to_string(::getpid()));
  void SetUp() override { std::filesystem::create_directories(dir_); }
  void TearDown() override { std::filesystem::remove_all(dir_); }
};

TEST_F(CsvTest, EmptyListWritesHeaderOnly) {
  emit_csv({}, dir_ / "e.csv");
  std::ifstream in(dir_ / "e.csv");
  std::string all((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(all, std::string(kCsvHeader) + "\n");
  EXPECT_TRUE(read_csv(dir_ / "e.csv").empty());
}

TEST_F(CsvTest, ThreeResultsRoundTrip) {
  const std::vector<BenchResult> results{fake_result(BackendKind::Lazy, 1, 1000, 10000.5),
                                         fake_result(BackendKind::Coarse, 2, 7, 0.1 + 0.2),
                                         fake_result(BackendKind::LockFree, 8, 123456789, 1.0 / 3)};
  emit_csv(results, dir_ / "r.csv");
  std::ifstream in(dir_ / "r.csv");
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 4U);
  const auto rows = read_csv(dir_ / "r.csv");
  ASSERT_EQ(rows.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rows[i], to_row(results[i]));
  EXPECT_EQ(rows[2].throughput_ops_per_s, 1.0 / 3);
  EXPECT_EQ(rows[0].workload, "custom:10/10/30/10/10/30");
  EXPECT_EQ(format_csv(results), std::string(kCsvHeader) + "\n" + format_row(rows[0]) + "\n" +
                                     format_row(rows[1]) + "\n" + format_row(rows[2]) + "\n");
}

TEST_F(CsvTest, RealRunRoundTrips) {
  BenchConfig cfg;
  cfg.duration_s = 0.05;
  cfg.repeats = 2;
  cfg.die = true;
  const auto s = run_bench(cfg);
  const std::string text = format_csv(s.repeats);
  const auto rows = parse_csv(text);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].backend, "lazy");
  EXPECT_TRUE(rows[0].die);
  EXPECT_EQ(rows[1].total_ops, s.repeats[1].total_ops);
  std::string again = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) again += format_row(r) + "\n";
  EXPECT_EQ(again, text);
}

TEST_F(CsvTest, IoErrorsNameThePath) {
  const auto bad = dir_ / "missing" / "out.csv";
  try {
    emit_csv({}, bad);
    FAIL() << "no error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(bad.string()), std::string::npos);
  }
  EXPECT_THROW(read_csv(bad), std::runtime_error);
}

TEST(Csv, ParseErrorsCarryLineNumbers) {
  const std::string header = std::string(kCsvHeader) + "\n";
  const std::string row = "lazy,update,1,2,32,64,0,0,42,100,50\n";
  EXPECT_EQ(parse_csv(header + row).size(), 1U);
  const auto fails_at = [](const std::string& text, const std::string& where) {
    try {
      parse_csv(text);
      ADD_FAILURE() << "accepted";
    } catch (const std::runtime_error& e) {
      EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
    }
  };
  fails_at("", "line 1");
  fails_at("backend,workload\n" + row, "line 1");
  fails_at(header + row + "lazy,update,1\n", "line 3");
  fails_at(header + "lazy,update,x,2,32,64,0,0,42,100,50\n", "line 2");
  fails_at(header + "lazy,update,1,2,32,64,2,0,42,100,50\n", "line 2");
}

}  // namespace
}  // namespace cgraph::bench
