#pragma once

#include <atomic>
#include <barrier>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "gcol/coloring.hpp"
#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/types.hpp"

namespace gcol {

enum class Algorithm { seq, catalyurek, rsoc };

inline constexpr std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::seq: return "seq";
    case Algorithm::catalyurek: return "catalyurek";
    case Algorithm::rsoc: return "rsoc";
  }
  return "?";
}

inline std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  if (name == "seq") return Algorithm::seq;
  if (name == "catalyurek") return Algorithm::catalyurek;
  if (name == "rsoc") return Algorithm::rsoc;
  return std::nullopt;
}

// Instrumentation collected by one coloring run.
//
// rounds counts executed iterations of the outer loop (at least 1, even on an
// empty graph). conflicts_per_round[r] is the number of vertices found
// defective in round r, so the final round always contributes 0 and
// conflicts_total is the sum. barrier_events counts barrier completions:
// 2 * rounds for the two-phase algorithm, rounds + 1 for the single-barrier
// variant (its extra event is the barrier after the initial coloring pass).
struct ColoringStats {
  Algorithm algorithm = Algorithm::seq;
  unsigned thread_count = 1;
  std::uint64_t rounds = 0;
  std::uint64_t conflicts_total = 0;
  std::vector<std::uint64_t> conflicts_per_round;
  std::uint64_t barrier_events = 0;
  std::uint32_t num_colors = 0;
  std::uint64_t wall_time_ns = 0;
  bool fallback_triggered = false;
};

struct ColoringRun {
  Coloring coloring;
  ColoringStats stats;
};

struct ParallelOptions {
  // 0 selects the default: worklist size / (8 * threads), floored at
  // min_chunk_size. An explicit value is used as-is.
  std::size_t chunk_size = 0;
  std::size_t min_chunk_size = 64;
  // Rounds executed before giving up on speculation and finishing with the
  // sequential repair pass.
  std::uint64_t round_cap = 1000;
};

namespace detail {

// Work is handed out in contiguous chunks of the current worklist. Workers
// claim chunks in ascending order from a shared cursor, so the colored
// frontier advances mostly front-to-back and the palette stays close to the
// sequential one; a static per-worker striping would instead leave uncolored
// gaps whose later filling sees both sides already colored and drives the
// color count up. With one worker this degenerates to a single ascending
// sweep.
inline std::size_t pick_chunk_size(std::size_t work_items, unsigned threads,
                                   const ParallelOptions& opt) {
  if (opt.chunk_size > 0) return opt.chunk_size;
  const std::size_t target = work_items / (std::size_t{8} * threads);
  return std::max({target, opt.min_chunk_size, std::size_t{1}});
}

template <class Body>
inline void for_claimed_chunks(std::atomic<std::uint64_t>& cursor,
                               std::size_t total, std::size_t chunk_size,
                               Body&& body) {
  if (total == 0) return;
  const std::uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;
  for (std::uint64_t k = cursor.fetch_add(1, std::memory_order_relaxed);
       k < num_chunks; k = cursor.fetch_add(1, std::memory_order_relaxed)) {
    const std::size_t begin = static_cast<std::size_t>(k) * chunk_size;
    const std::size_t end = std::min(total, begin + chunk_size);
    body(begin, end);
  }
}

// Defect test against colors that may be mutating concurrently.
inline bool defective_relaxed(const Graph& g, Coloring& coloring, vertex_t v) {
  const color_t cv = load_relaxed(coloring.colors[v]);
  const auto nb = g.neighbors(v);
  for (auto it = std::upper_bound(nb.begin(), nb.end(), v); it != nb.end(); ++it)
    if (load_relaxed(coloring.colors[*it]) == cv) return true;
  return false;
}

// State shared by the workers of one parallel coloring run. Mutated only in
// barrier completion functions, while every worker is blocked.
struct RoundState {
  Worklist worklist;
  std::vector<Worklist> local_defects;
  std::size_t chunk_size = 1;
  // Shared chunk cursor for the current phase; reset to 0 at every barrier
  // completion, while all workers are blocked.
  std::atomic<std::uint64_t> next_chunk{0};
  bool done = false;
  bool capped = false;

  // Appends each worker's defect list in worker-id order. With one worker the
  // worklist is fully deterministic; with several, chunk claiming decides
  // which worker saw each defect.
  std::uint64_t merge_defects() {
    worklist.clear();
    std::uint64_t found = 0;
    for (auto& defects : local_defects) {
      found += defects.size();
      worklist.insert(worklist.end(), defects.begin(), defects.end());
      defects.clear();
    }
    return found;
  }
};

inline void finish_round(RoundState& state, ColoringStats& stats,
                         const ParallelOptions& opt, unsigned threads) {
  const std::uint64_t found = state.merge_defects();
  stats.rounds += 1;
  stats.conflicts_per_round.push_back(found);
  stats.conflicts_total += found;
  if (state.worklist.empty()) {
    state.done = true;
  } else if (stats.rounds >= opt.round_cap) {
    state.done = true;
    state.capped = true;
  } else {
    state.chunk_size = pick_chunk_size(state.worklist.size(), threads, opt);
  }
}

template <class Worker>
inline void run_workers(unsigned threads, Worker&& worker) {
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker, w);
  worker(0);
}

inline void finalize_run(const Graph& g, ColoringRun& run, bool capped,
                         std::chrono::steady_clock::time_point started) {
  if (capped) {
    run.stats.fallback_triggered = true;
    repair_coloring(g, run.coloring);
  }
  run.stats.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - started)
          .count());
  if (!verify_coloring(g, run.coloring).ok())
    throw std::logic_error("parallel coloring finished improper");
  run.stats.num_colors = count_colors(run.coloring);
}

}  // namespace detail

// Two-phase speculative coloring. Each round colors the worklist tentatively,
// waits at a barrier, then detects conflicts and collects the lower-indexed
// endpoint of every defective edge for the next round. Two barriers per round.
inline ColoringRun color_catalyurek(const Graph& g, unsigned thread_count,
                                    const ParallelOptions& opt = {}) {
  if (thread_count < 1) throw input_error("thread_count must be at least 1");
  const vertex_t n = g.num_vertices();

  ColoringRun run{Coloring(n), {}};
  ColoringStats& stats = run.stats;
  stats.algorithm = Algorithm::catalyurek;
  stats.thread_count = thread_count;

  detail::RoundState state;
  state.worklist.resize(n);
  std::iota(state.worklist.begin(), state.worklist.end(), vertex_t{0});
  state.local_defects.resize(thread_count);
  state.chunk_size = detail::pick_chunk_size(n, thread_count, opt);

  const auto started = std::chrono::steady_clock::now();

  bool after_tentative = false;
  auto on_phase_complete = [&]() noexcept {
    stats.barrier_events += 1;
    if (!after_tentative) {
      after_tentative = true;  // tentative phase ended; detection starts
    } else {
      after_tentative = false;
      detail::finish_round(state, stats, opt, thread_count);
    }
    state.next_chunk.store(0, std::memory_order_relaxed);
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(thread_count), on_phase_complete);

  auto worker = [&](unsigned wid) {
    ForbiddenMarks marks(g.max_degree() + 1);
    Worklist& defects = state.local_defects[wid];
    while (true) {
      detail::for_claimed_chunks(
          state.next_chunk, state.worklist.size(), state.chunk_size,
          [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
              const vertex_t v = state.worklist[i];
              detail::store_relaxed(run.coloring.colors[v],
                                    smallest_available_color(g, run.coloring, v, marks));
            }
          });
      sync.arrive_and_wait();
      detail::for_claimed_chunks(
          state.next_chunk, state.worklist.size(), state.chunk_size,
          [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
              const vertex_t v = state.worklist[i];
              if (has_conflicting_higher_neighbor(g, run.coloring, v))
                defects.push_back(v);
            }
          });
      sync.arrive_and_wait();
      if (state.done) break;
    }
  };
  detail::run_workers(thread_count, worker);

  detail::finalize_run(g, run, state.capped, started);
  return run;
}

// Single-barrier variant: after the initial coloring pass, detection and
// recoloring are merged into one phase. A recolored vertex may pick up a new
// conflict from a concurrent recolor, so it stays on the worklist and is
// re-inspected next round. One barrier per round plus one after the initial
// pass.
inline ColoringRun color_rsoc(const Graph& g, unsigned thread_count,
                              const ParallelOptions& opt = {}) {
  if (thread_count < 1) throw input_error("thread_count must be at least 1");
  const vertex_t n = g.num_vertices();

  ColoringRun run{Coloring(n), {}};
  ColoringStats& stats = run.stats;
  stats.algorithm = Algorithm::rsoc;
  stats.thread_count = thread_count;

  detail::RoundState state;
  state.local_defects.resize(thread_count);
  state.chunk_size = detail::pick_chunk_size(n, thread_count, opt);

  const auto started = std::chrono::steady_clock::now();

  bool initial_pass_done = false;
  auto on_phase_complete = [&]() noexcept {
    stats.barrier_events += 1;
    if (!initial_pass_done) {
      initial_pass_done = true;
      state.worklist.resize(n);
      std::iota(state.worklist.begin(), state.worklist.end(), vertex_t{0});
    } else {
      detail::finish_round(state, stats, opt, thread_count);
    }
    state.next_chunk.store(0, std::memory_order_relaxed);
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(thread_count), on_phase_complete);

  auto worker = [&](unsigned wid) {
    ForbiddenMarks marks(g.max_degree() + 1);
    Worklist& defects = state.local_defects[wid];
    // Initial pass: tentative color for every vertex.
    detail::for_claimed_chunks(
        state.next_chunk, n, state.chunk_size,
        [&](std::size_t begin, std::size_t end) {
          for (std::size_t i = begin; i < end; ++i) {
            const auto v = static_cast<vertex_t>(i);
            detail::store_relaxed(run.coloring.colors[v],
                                  smallest_available_color(g, run.coloring, v, marks));
          }
        });
    sync.arrive_and_wait();
    while (true) {
      detail::for_claimed_chunks(
          state.next_chunk, state.worklist.size(), state.chunk_size,
          [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
              const vertex_t v = state.worklist[i];
              if (detail::defective_relaxed(g, run.coloring, v)) {
                detail::store_relaxed(
                    run.coloring.colors[v],
                    smallest_available_color(g, run.coloring, v, marks));
                defects.push_back(v);
              }
            }
          });
      sync.arrive_and_wait();
      if (state.done) break;
    }
  };
  detail::run_workers(thread_count, worker);

  detail::finalize_run(g, run, state.capped, started);
  return run;
}

}  // namespace gcol
