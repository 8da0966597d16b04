#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcol/errors.hpp"
#include "gcol/types.hpp"

namespace gcol {

// Immutable undirected graph in compressed sparse row form.
//
// Every edge appears in both endpoints' adjacency lists, lists are sorted
// ascending, and there are no self-loops or duplicate entries. The structure
// never changes after construction, so concurrent reads are safe.
class Graph {
 public:
  Graph() = default;

  vertex_t num_vertices() const noexcept { return num_vertices_; }

  std::uint64_t num_edges() const noexcept { return neighbors_.size() / 2; }

  // Largest degree over all vertices; 0 for an empty graph.
  std::uint32_t max_degree() const noexcept { return max_degree_; }

  std::uint32_t degree(vertex_t v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  // Neighbors of v in ascending order.
  std::span<const vertex_t> neighbors(vertex_t v) const {
    check_vertex(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  const std::vector<std::uint64_t>& offsets() const noexcept { return offsets_; }
  const std::vector<vertex_t>& adjacency() const noexcept { return neighbors_; }

  bool operator==(const Graph&) const = default;

  // Checks every structural invariant; throws input_error on violation.
  // Construction via build_graph always yields a valid graph, so this is
  // mainly useful after deserialization or in tests.
  void validate() const {
    if (offsets_.size() != static_cast<std::size_t>(num_vertices_) + 1)
      throw input_error("graph: offsets array has wrong length");
    if (offsets_.front() != 0 || offsets_.back() != neighbors_.size())
      throw input_error("graph: offsets do not cover the adjacency array");
    std::uint32_t seen_max_degree = 0;
    for (vertex_t v = 0; v < num_vertices_; ++v) {
      if (offsets_[v] > offsets_[v + 1])
        throw input_error("graph: offsets are not monotone");
      seen_max_degree = std::max(
          seen_max_degree, static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]));
      for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        const vertex_t w = neighbors_[i];
        if (w >= num_vertices_)
          throw input_error("graph: neighbor id out of range");
        if (w == v) throw input_error("graph: self-loop present");
        if (i > offsets_[v] && neighbors_[i - 1] >= w)
          throw input_error("graph: adjacency list not sorted strictly ascending");
        // Symmetry: v must appear in w's list.
        const auto wb = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[w]);
        const auto we = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[w + 1]);
        if (!std::binary_search(wb, we, v))
          throw input_error("graph: edge stored in one direction only");
      }
    }
    if (seen_max_degree != max_degree_)
      throw input_error("graph: cached max degree is stale");
  }

  friend Graph build_graph(std::vector<std::pair<vertex_t, vertex_t>> edges,
                           vertex_t num_vertices);

 private:
  void check_vertex(vertex_t v) const {
    if (v >= num_vertices_)
      throw input_error("vertex id " + std::to_string(v) + " out of range (|V| = " +
                        std::to_string(num_vertices_) + ")");
  }

  vertex_t num_vertices_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<vertex_t> neighbors_;
};

// Builds the canonical CSR form from an unordered edge list. Self-loops are
// dropped, duplicates (in either orientation) collapse to one edge, and ids
// must be < num_vertices. The result is independent of input order.
inline Graph build_graph(std::vector<std::pair<vertex_t, vertex_t>> edges,
                         vertex_t num_vertices) {
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices)
      throw input_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") references a vertex id >= " + std::to_string(num_vertices));
  }

  // Normalize to (min, max), drop self-loops, dedupe.
  std::size_t kept = 0;
  for (auto& [u, v] : edges) {
    if (u == v) continue;
    edges[kept++] = {std::min(u, v), std::max(u, v)};
  }
  edges.resize(kept);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.num_vertices_ = num_vertices;
  g.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.neighbors_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so both directions fill each list ascending.
  for (const auto& [u, v] : edges) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }

  for (vertex_t v = 0; v < num_vertices; ++v) {
    g.max_degree_ = std::max(
        g.max_degree_, static_cast<std::uint32_t>(g.offsets_[v + 1] - g.offsets_[v]));
  }
  return g;
}

}  // namespace gcol
