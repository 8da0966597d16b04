#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/types.hpp"

namespace gcol {

// Per-vertex color assignment. Entries are kUncolored until assigned.
struct Coloring {
  std::vector<color_t> colors;

  Coloring() = default;
  explicit Coloring(std::size_t n) : colors(n, kUncolored) {}

  std::size_t size() const noexcept { return colors.size(); }
  color_t operator[](vertex_t v) const { return colors[v]; }
  color_t& operator[](vertex_t v) { return colors[v]; }

  bool complete() const noexcept {
    return std::none_of(colors.begin(), colors.end(),
                        [](color_t c) { return c == kUncolored; });
  }

  bool operator==(const Coloring&) const = default;
};

// Ordered, duplicate-free list of vertex ids still being worked on.
using Worklist = std::vector<vertex_t>;

// Reusable forbidden-color scratch. mark() is O(1) and reuse via next_epoch()
// is O(1) as well: entries are stamped with the current epoch instead of being
// cleared. Capacity must be at least degree(v) + 1 for each queried vertex.
class ForbiddenMarks {
 public:
  explicit ForbiddenMarks(std::size_t capacity) : stamps_(capacity, 0) {}

  std::size_t capacity() const noexcept { return stamps_.size(); }

  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0);
      epoch_ = 1;
    }
  }

  void mark(color_t c) {
    assert(c >= 0 && static_cast<std::size_t>(c) < stamps_.size());
    stamps_[static_cast<std::size_t>(c)] = epoch_;
  }

  bool marked(color_t c) const {
    assert(c >= 0 && static_cast<std::size_t>(c) < stamps_.size());
    return stamps_[static_cast<std::size_t>(c)] == epoch_;
  }

  // Smallest color in [0, limit] not marked this epoch. At most `limit`
  // distinct marks fit below `limit + 1`, so a hit is guaranteed.
  color_t smallest_unmarked(color_t limit) const {
    for (color_t c = 0; c <= limit; ++c)
      if (!marked(c)) return c;
    assert(false && "no unmarked color in [0, limit]");
    return limit + 1;
  }

 private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t epoch_ = 0;
};

namespace detail {

// Color cells may be written by other threads between barriers; all in-round
// accesses go through relaxed atomics. Barriers provide the ordering.
inline color_t load_relaxed(color_t& cell) {
  return std::atomic_ref<color_t>(cell).load(std::memory_order_relaxed);
}

inline void store_relaxed(color_t& cell, color_t value) {
  std::atomic_ref<color_t>(cell).store(value, std::memory_order_relaxed);
}

}  // namespace detail

// Smallest color in [0, degree(v)] not used by any colored neighbor of v.
// Reads neighbor colors with relaxed atomics so it can run concurrently with
// tentative recoloring; `marks` needs capacity >= degree(v) + 1.
inline color_t smallest_available_color(const Graph& g, Coloring& coloring,
                                        vertex_t v, ForbiddenMarks& marks) {
  const auto nb = g.neighbors(v);
  const color_t limit = static_cast<color_t>(nb.size());
  assert(marks.capacity() > static_cast<std::size_t>(limit));
  marks.next_epoch();
  for (const vertex_t w : nb) {
    const color_t cw = detail::load_relaxed(coloring.colors[w]);
    if (cw >= 0 && cw <= limit) marks.mark(cw);
  }
  return marks.smallest_unmarked(limit);
}

// Greedy first-fit over vertices in ascending id order. Deterministic; uses
// at most max_degree + 1 colors.
inline Coloring first_fit_sequential(const Graph& g) {
  Coloring coloring(g.num_vertices());
  ForbiddenMarks marks(g.max_degree() + 1);
  for (vertex_t v = 0; v < g.num_vertices(); ++v)
    coloring.colors[v] = smallest_available_color(g, coloring, v, marks);
  return coloring;
}

// True iff some neighbor with a higher id carries the same color as v.
// This is the defect test: of a conflicting pair, the lower-indexed endpoint
// is the one that recolors. Adjacency is sorted, so higher ids are a suffix.
inline bool has_conflicting_higher_neighbor(const Graph& g, const Coloring& coloring,
                                            vertex_t v) {
  const color_t cv = coloring.colors[v];
  if (cv == kUncolored) return false;
  const auto nb = g.neighbors(v);
  for (auto it = std::upper_bound(nb.begin(), nb.end(), v); it != nb.end(); ++it)
    if (coloring.colors[*it] == cv) return true;
  return false;
}

// Subset of `pending` whose members conflict with a higher-indexed neighbor,
// in the order they appear in `pending`.
inline Worklist detect_conflicts(const Graph& g, const Coloring& coloring,
                                 const Worklist& pending) {
  if (coloring.size() != g.num_vertices())
    throw input_error("detect_conflicts: coloring size does not match graph");
  Worklist defective;
  for (const vertex_t v : pending)
    if (has_conflicting_higher_neighbor(g, coloring, v)) defective.push_back(v);
  return defective;
}

// One entry per violation found by verify_coloring. An uncolored vertex is
// reported as {v, kNoVertex, kUncolored}; a defective edge {u, v} with u < v
// is reported once as {u, v, shared color}.
struct ConflictReport {
  struct Violation {
    vertex_t u;
    vertex_t v;
    color_t color;
    bool operator==(const Violation&) const = default;
  };

  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Full proper-and-complete check, reporting every violation.
inline ConflictReport verify_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.num_vertices())
    throw input_error("verify_coloring: coloring has " +
                      std::to_string(coloring.size()) + " entries, graph has " +
                      std::to_string(g.num_vertices()) + " vertices");
  ConflictReport report;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    const color_t cv = coloring.colors[v];
    if (cv == kUncolored) {
      report.violations.push_back({v, kNoVertex, kUncolored});
      continue;
    }
    const auto nb = g.neighbors(v);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), v); it != nb.end(); ++it)
      if (coloring.colors[*it] == cv) report.violations.push_back({v, *it, cv});
  }
  return report;
}

// Number of distinct colors in a complete coloring. First-fit style colorings
// are dense from 0, so this equals 1 + max color for them.
inline std::uint32_t count_colors(const Coloring& coloring) {
  color_t max_color = kUncolored;
  for (const color_t c : coloring.colors) {
    if (c == kUncolored)
      throw input_error("count_colors: coloring is incomplete");
    if (c < 0)
      throw input_error("count_colors: negative color value " + std::to_string(c));
    max_color = std::max(max_color, c);
  }
  if (max_color == kUncolored) return 0;
  std::vector<bool> used(static_cast<std::size_t>(max_color) + 1, false);
  for (const color_t c : coloring.colors) used[static_cast<std::size_t>(c)] = true;
  const auto distinct = static_cast<std::uint32_t>(
      std::count(used.begin(), used.end(), true));
  return distinct;
}

// Sequential cleanup pass: walks vertices in ascending order and recolors any
// that are uncolored or still conflict with a higher-indexed neighbor. A
// single pass leaves the coloring proper and complete, because once v is
// fixed it differs from every colored neighbor and later assignments avoid v.
// Returns the number of vertices recolored.
inline std::uint64_t repair_coloring(const Graph& g, Coloring& coloring) {
  if (coloring.size() != g.num_vertices())
    throw input_error("repair_coloring: coloring size does not match graph");
  ForbiddenMarks marks(g.max_degree() + 1);
  std::uint64_t recolored = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (coloring.colors[v] == kUncolored ||
        has_conflicting_higher_neighbor(g, coloring, v)) {
      coloring.colors[v] = smallest_available_color(g, coloring, v, marks);
      ++recolored;
    }
  }
  return recolored;
}

}  // namespace gcol
