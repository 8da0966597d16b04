#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gcol/coloring.hpp"
#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/parallel.hpp"
#include "gcol/types.hpp"

namespace gcol {

struct GraphSummary {
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::uint32_t max_degree = 0;
};

inline GraphSummary summarize(const Graph& g) {
  return {g.num_vertices(), g.num_edges(), g.max_degree()};
}

// Runs one coloring with the requested algorithm and returns the coloring
// plus its stats. The sequential algorithm reports one round, zero conflicts,
// and zero barrier events; thread_count records the requested value.
inline ColoringRun run_coloring(const Graph& g, Algorithm algorithm,
                                unsigned thread_count,
                                const ParallelOptions& opt = {}) {
  switch (algorithm) {
    case Algorithm::catalyurek:
      return color_catalyurek(g, thread_count, opt);
    case Algorithm::rsoc:
      return color_rsoc(g, thread_count, opt);
    case Algorithm::seq:
      break;
  }
  if (thread_count < 1) throw input_error("thread_count must be at least 1");
  ColoringRun run;
  const auto started = std::chrono::steady_clock::now();
  run.coloring = first_fit_sequential(g);
  run.stats.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - started)
          .count());
  run.stats.algorithm = Algorithm::seq;
  run.stats.thread_count = thread_count;
  run.stats.rounds = 1;
  run.stats.conflicts_per_round = {0};
  run.stats.num_colors = count_colors(run.coloring);
  return run;
}

// Per-thread-count aggregate over the repeats of one benchmarked algorithm.
struct ThreadAggregate {
  unsigned thread_count = 1;
  double wall_time_ns_mean = 0;
  std::uint64_t wall_time_ns_min = 0;
  std::uint64_t wall_time_ns_max = 0;
  double conflicts_total_mean = 0;
  double rounds_mean = 0;
  std::uint32_t num_colors_median = 0;
};

// One benchmarked algorithm on one graph: `repeats` verified runs per thread
// count, in thread_counts order, plus per-thread-count aggregates.
struct BenchReport {
  std::string graph_name;
  Algorithm algorithm = Algorithm::seq;
  GraphSummary graph_stats;
  std::uint32_t repeats = 0;
  std::vector<unsigned> thread_counts;
  std::vector<ColoringStats> runs;
  std::vector<ThreadAggregate> aggregate;
};

namespace detail {

inline ThreadAggregate aggregate_runs(unsigned thread_count,
                                      const std::vector<ColoringStats>& runs,
                                      std::size_t begin, std::size_t end) {
  ThreadAggregate agg;
  agg.thread_count = thread_count;
  agg.wall_time_ns_min = UINT64_MAX;
  std::vector<std::uint32_t> colors;
  double wall_sum = 0, conflict_sum = 0, round_sum = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const ColoringStats& s = runs[i];
    wall_sum += static_cast<double>(s.wall_time_ns);
    conflict_sum += static_cast<double>(s.conflicts_total);
    round_sum += static_cast<double>(s.rounds);
    agg.wall_time_ns_min = std::min(agg.wall_time_ns_min, s.wall_time_ns);
    agg.wall_time_ns_max = std::max(agg.wall_time_ns_max, s.wall_time_ns);
    colors.push_back(s.num_colors);
  }
  const auto count = static_cast<double>(end - begin);
  agg.wall_time_ns_mean = wall_sum / count;
  agg.conflicts_total_mean = conflict_sum / count;
  agg.rounds_mean = round_sum / count;
  std::sort(colors.begin(), colors.end());
  agg.num_colors_median = colors[(colors.size() - 1) / 2];  // lower median
  return agg;
}

}  // namespace detail

// Benchmarks one algorithm: for each thread count, `repeats` runs, each
// verified proper and complete (a failed verification is a hard error, since
// timings of an incorrect run are meaningless).
inline BenchReport run_benchmark(const Graph& g, std::string graph_name,
                                 Algorithm algorithm,
                                 const std::vector<unsigned>& thread_counts,
                                 std::uint32_t repeats,
                                 const ParallelOptions& opt = {}) {
  if (repeats < 1) throw input_error("run_benchmark: repeats must be at least 1");
  if (thread_counts.empty())
    throw input_error("run_benchmark: need at least one thread count");
  for (const unsigned tc : thread_counts)
    if (tc < 1) throw input_error("run_benchmark: thread counts must be at least 1");

  BenchReport report;
  report.graph_name = std::move(graph_name);
  report.algorithm = algorithm;
  report.graph_stats = summarize(g);
  report.repeats = repeats;
  report.thread_counts = thread_counts;
  report.runs.reserve(static_cast<std::size_t>(repeats) * thread_counts.size());
  for (const unsigned tc : thread_counts) {
    const std::size_t begin = report.runs.size();
    for (std::uint32_t r = 0; r < repeats; ++r) {
      ColoringRun run = run_coloring(g, algorithm, tc, opt);
      if (!verify_coloring(g, run.coloring).ok())
        throw verification_error("benchmark run produced an improper coloring (" +
                                 std::string(to_string(algorithm)) + ", " +
                                 std::to_string(tc) + " threads)");
      report.runs.push_back(std::move(run.stats));
    }
    report.aggregate.push_back(
        detail::aggregate_runs(tc, report.runs, begin, report.runs.size()));
  }
  return report;
}

// Speedup of `a` relative to `b` for every thread count both reports share:
// mean wall time of b divided by mean wall time of a (> 1 means a is faster).
inline std::vector<std::pair<unsigned, double>> relative_speedup(
    const BenchReport& a, const BenchReport& b) {
  std::vector<std::pair<unsigned, double>> out;
  for (const ThreadAggregate& ta : a.aggregate)
    for (const ThreadAggregate& tb : b.aggregate)
      if (ta.thread_count == tb.thread_count && ta.wall_time_ns_mean > 0)
        out.emplace_back(ta.thread_count, tb.wall_time_ns_mean / ta.wall_time_ns_mean);
  return out;
}

inline nlohmann::json to_json(const ColoringStats& s) {
  return nlohmann::json{
      {"algorithm", std::string(to_string(s.algorithm))},
      {"thread_count", s.thread_count},
      {"rounds", s.rounds},
      {"conflicts_total", s.conflicts_total},
      {"conflicts_per_round", s.conflicts_per_round},
      {"barrier_events", s.barrier_events},
      {"num_colors", s.num_colors},
      {"wall_time_ns", s.wall_time_ns},
      {"fallback_triggered", s.fallback_triggered},
  };
}

inline nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json runs = nlohmann::json::array();
  for (const ColoringStats& s : report.runs) runs.push_back(to_json(s));
  nlohmann::json aggregate = nlohmann::json::array();
  for (const ThreadAggregate& a : report.aggregate) {
    aggregate.push_back({
        {"thread_count", a.thread_count},
        {"wall_time_ns_mean", a.wall_time_ns_mean},
        {"wall_time_ns_min", a.wall_time_ns_min},
        {"wall_time_ns_max", a.wall_time_ns_max},
        {"conflicts_total_mean", a.conflicts_total_mean},
        {"rounds_mean", a.rounds_mean},
        {"num_colors_median", a.num_colors_median},
    });
  }
  return nlohmann::json{
      {"graph_name", report.graph_name},
      {"algorithm", std::string(to_string(report.algorithm))},
      {"graph_stats",
       {{"num_vertices", report.graph_stats.num_vertices},
        {"num_edges", report.graph_stats.num_edges},
        {"max_degree", report.graph_stats.max_degree}}},
      {"repeats", report.repeats},
      {"thread_counts", report.thread_counts},
      {"runs", runs},
      {"aggregate", aggregate},
  };
}

inline constexpr std::string_view kCsvHeader =
    "algorithm,threads,run_index,rounds,conflicts_total,num_colors,wall_time_ns";

// Rows only; lets several reports share one file with a single header.
inline void write_csv_rows(std::ostream& out, const BenchReport& report) {
  std::size_t i = 0;
  for (const unsigned tc : report.thread_counts) {
    for (std::uint32_t r = 0; r < report.repeats; ++r, ++i) {
      const ColoringStats& s = report.runs[i];
      out << to_string(s.algorithm) << ',' << tc << ',' << r << ',' << s.rounds
          << ',' << s.conflicts_total << ',' << s.num_colors << ','
          << s.wall_time_ns << '\n';
    }
  }
}

// One row per run: run_index counts runs within the same thread count.
inline void write_csv(std::ostream& out, const BenchReport& report) {
  out << kCsvHeader << '\n';
  write_csv_rows(out, report);
}

}  // namespace gcol
