#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "gcol/bench.hpp"
#include "support/oracles.hpp"

using gcol::Algorithm;
using gcol::BenchReport;
using gcol::Graph;
using gcol::build_graph;
using gcol::vertex_t;

namespace {

Graph bench_fixture() {
  std::mt19937_64 rng(6666);
  return oracle::random_graph(rng, 400, 6.0);
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
  for (const Algorithm a :
       {Algorithm::seq, Algorithm::catalyurek, Algorithm::rsoc}) {
    const auto parsed = gcol::algorithm_from_string(gcol::to_string(a));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == a);
  }
  CHECK(!gcol::algorithm_from_string("greedy").has_value());
}

TEST_CASE("run_coloring dispatches and fills stats") {
  const Graph g = bench_fixture();
  const auto seq = gcol::run_coloring(g, Algorithm::seq, 1);
  CHECK(seq.stats.algorithm == Algorithm::seq);
  CHECK(seq.stats.rounds == 1);
  CHECK(seq.stats.conflicts_total == 0);
  CHECK(seq.stats.barrier_events == 0);
  CHECK(seq.coloring == gcol::first_fit_sequential(g));
  CHECK(seq.stats.num_colors == gcol::count_colors(seq.coloring));

  const auto cat = gcol::run_coloring(g, Algorithm::catalyurek, 2);
  CHECK(cat.stats.algorithm == Algorithm::catalyurek);
  const auto rs = gcol::run_coloring(g, Algorithm::rsoc, 2);
  CHECK(rs.stats.algorithm == Algorithm::rsoc);
}

TEST_CASE("benchmark shape: repeats per thread count, aggregates aligned") {
  const Graph g = bench_fixture();
  const std::vector<unsigned> threads{1, 2, 4};
  const BenchReport report =
      gcol::run_benchmark(g, "fixture", Algorithm::rsoc, threads, 3);

  CHECK(report.repeats == 3);
  CHECK(report.thread_counts == threads);
  REQUIRE(report.runs.size() == threads.size() * 3);
  REQUIRE(report.aggregate.size() == threads.size());
  std::size_t i = 0;
  for (std::size_t t = 0; t < threads.size(); ++t) {
    CHECK(report.aggregate[t].thread_count == threads[t]);
    CHECK(report.aggregate[t].wall_time_ns_min <=
          report.aggregate[t].wall_time_ns_max);
    for (int r = 0; r < 3; ++r, ++i)
      CHECK(report.runs[i].thread_count == threads[t]);
  }
  CHECK(report.graph_stats.num_vertices == g.num_vertices());
  CHECK(report.graph_stats.num_edges == g.num_edges());
  CHECK(report.graph_stats.max_degree == g.max_degree());
}

TEST_CASE("single-thread benchmark runs are conflict-free and identical") {
  const Graph g = bench_fixture();
  const BenchReport report =
      gcol::run_benchmark(g, "fixture", Algorithm::rsoc, {1}, 4);
  for (const auto& s : report.runs) {
    CHECK(s.conflicts_total == 0);
    CHECK(s.rounds == 1);
    CHECK(s.num_colors == report.runs.front().num_colors);
  }
  CHECK(report.aggregate[0].conflicts_total_mean == 0.0);
  CHECK(report.aggregate[0].rounds_mean == 1.0);
  CHECK(report.aggregate[0].num_colors_median == report.runs.front().num_colors);
}

TEST_CASE("barrier accounting separates the two parallel algorithms") {
  const Graph g = bench_fixture();
  for (const unsigned tc : {1u, 4u}) {
    const auto cat = gcol::run_coloring(g, Algorithm::catalyurek, tc);
    CHECK(cat.stats.barrier_events == 2 * cat.stats.rounds);
    const auto rs = gcol::run_coloring(g, Algorithm::rsoc, tc);
    CHECK(rs.stats.barrier_events == rs.stats.rounds + 1);
  }
}

TEST_CASE("json report carries the full schema") {
  const Graph g = bench_fixture();
  const BenchReport report =
      gcol::run_benchmark(g, "fixture", Algorithm::catalyurek, {1, 2}, 2);
  const nlohmann::json j = gcol::to_json(report);

  CHECK(j.at("graph_name") == "fixture");
  CHECK(j.at("algorithm") == "catalyurek");
  CHECK(j.at("repeats") == 2);
  CHECK(j.at("graph_stats").at("num_vertices") == g.num_vertices());
  CHECK(j.at("graph_stats").at("num_edges") == g.num_edges());
  CHECK(j.at("graph_stats").at("max_degree") == g.max_degree());
  CHECK(j.at("thread_counts") == nlohmann::json(std::vector<unsigned>{1, 2}));
  REQUIRE(j.at("runs").is_array());
  REQUIRE(j.at("runs").size() == 4);
  for (const auto& run : j.at("runs")) {
    CHECK(run.at("algorithm") == "catalyurek");
    CHECK(run.at("rounds").get<std::uint64_t>() >= 1);
    CHECK(run.at("conflicts_per_round").is_array());
    std::uint64_t sum = 0;
    for (const auto& c : run.at("conflicts_per_round"))
      sum += c.get<std::uint64_t>();
    CHECK(run.at("conflicts_total").get<std::uint64_t>() == sum);
    CHECK(run.at("barrier_events").get<std::uint64_t>() ==
          2 * run.at("rounds").get<std::uint64_t>());
    CHECK(run.at("num_colors").get<std::uint32_t>() <= g.max_degree() + 1);
    CHECK(run.at("fallback_triggered").is_boolean());
    CHECK(run.at("wall_time_ns").is_number_unsigned());
  }
  REQUIRE(j.at("aggregate").is_array());
  CHECK(j.at("aggregate").size() == 2);
  for (const auto& agg : j.at("aggregate")) {
    CHECK(agg.contains("thread_count"));
    CHECK(agg.contains("wall_time_ns_mean"));
    CHECK(agg.contains("wall_time_ns_min"));
    CHECK(agg.contains("wall_time_ns_max"));
    CHECK(agg.contains("conflicts_total_mean"));
    CHECK(agg.contains("rounds_mean"));
    CHECK(agg.contains("num_colors_median"));
  }
}

TEST_CASE("csv has one row per run with the documented columns") {
  const Graph g = bench_fixture();
  const BenchReport report =
      gcol::run_benchmark(g, "fixture", Algorithm::seq, {1, 2}, 3);
  std::ostringstream out;
  gcol::write_csv(out, report);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "algorithm,threads,run_index,rounds,conflicts_total,num_colors,wall_time_ns");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("seq,", 0) == 0);
  }
  CHECK(rows == 6);
}

TEST_CASE("relative speedup is the ratio of mean wall times") {
  BenchReport a;
  a.aggregate.push_back({1, 2000.0, 0, 0, 0, 0, 0});
  a.aggregate.push_back({4, 500.0, 0, 0, 0, 0, 0});
  BenchReport b;
  b.aggregate.push_back({1, 4000.0, 0, 0, 0, 0, 0});
  b.aggregate.push_back({4, 1500.0, 0, 0, 0, 0, 0});
  b.aggregate.push_back({8, 100.0, 0, 0, 0, 0, 0});

  const auto speedups = gcol::relative_speedup(a, b);
  REQUIRE(speedups.size() == 2);
  CHECK(speedups[0].first == 1);
  CHECK_THAT(speedups[0].second, Catch::Matchers::WithinRel(2.0, 1e-12));
  CHECK(speedups[1].first == 4);
  CHECK_THAT(speedups[1].second, Catch::Matchers::WithinRel(3.0, 1e-12));
}

TEST_CASE("benchmark argument validation") {
  const Graph g = build_graph({{0, 1}}, 2);
  CHECK_THROWS_AS(gcol::run_benchmark(g, "g", Algorithm::seq, {1}, 0),
                  gcol::input_error);
  CHECK_THROWS_AS(gcol::run_benchmark(g, "g", Algorithm::seq, {}, 1),
                  gcol::input_error);
  CHECK_THROWS_AS(gcol::run_benchmark(g, "g", Algorithm::seq, {0}, 1),
                  gcol::input_error);
}
