#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/types.hpp"

namespace gcol {

// Recursive-matrix generator parameters. The quadrant probabilities must sum
// to 1; edge_factor * 2^scale directed samples are drawn.
struct RmatParams {
  unsigned scale = 0;
  std::uint64_t edge_factor = 8;
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double d = 0.25;
  std::uint64_t seed = 1;

  void validate() const {
    for (const double p : {a, b, c, d})
      if (!(p >= 0.0 && p <= 1.0))
        throw input_error("rmat: quadrant probabilities must lie in [0, 1]");
    if (std::abs(a + b + c + d - 1.0) > 1e-9)
      throw input_error("rmat: quadrant probabilities must sum to 1");
    if (edge_factor < 1) throw input_error("rmat: edge_factor must be at least 1");
  }
};

// Named parameter sets: uniform (Erdos-Renyi-like), moderately skewed, and
// strongly skewed degree distributions.
inline std::optional<RmatParams> rmat_preset(std::string_view name) {
  RmatParams p;
  if (name == "rmat-er") {
    p.a = 0.25; p.b = 0.25; p.c = 0.25; p.d = 0.25;
    return p;
  }
  if (name == "rmat-g") {
    p.a = 0.45; p.b = 0.15; p.c = 0.15; p.d = 0.25;
    return p;
  }
  if (name == "rmat-b") {
    p.a = 0.55; p.b = 0.15; p.c = 0.15; p.d = 0.15;
    return p;
  }
  return std::nullopt;
}

namespace detail {

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output; bit-identical across platforms, unlike the distribution classes.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) via rejection sampling; portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

// Draws edge_factor * 2^scale directed samples by recursive quadrant descent,
// then drops self-loops and deduplicates undirected pairs, so the edge count
// of the result is at most edge_factor * 2^scale. Deterministic in the seed.
inline Graph generate_rmat(const RmatParams& params) {
  params.validate();
  if (params.scale >= 32)
    throw capacity_error("rmat: scale " + std::to_string(params.scale) +
                         " exceeds the 32-bit vertex id space");
  const std::uint64_t n = std::uint64_t{1} << params.scale;
  if (params.edge_factor > UINT64_MAX / n)
    throw capacity_error("rmat: sample count overflows");
  const std::uint64_t samples = params.edge_factor * n;

  std::mt19937_64 rng(params.seed);
  const double ab = params.a + params.b;
  const double abc = ab + params.c;

  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    vertex_t u = 0, v = 0;
    for (unsigned level = 0; level < params.scale; ++level) {
      const double r = detail::uniform01(rng);
      u <<= 1;
      v <<= 1;
      if (r < params.a) {
      } else if (r < ab) {
        v |= 1;
      } else if (r < abc) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    edges.emplace_back(u, v);
  }
  return build_graph(std::move(edges), static_cast<vertex_t>(n));
}

// Rebuilds the graph with vertex v renamed to perm[v]. perm must be a
// permutation of 0..|V|-1. Adjacency comes out sorted under the new ids.
inline Graph relabel_graph(const Graph& g, const std::vector<vertex_t>& perm) {
  const vertex_t n = g.num_vertices();
  if (perm.size() != n)
    throw input_error("relabel_graph: permutation must have one entry per vertex");
  std::vector<bool> hit(n, false);
  for (const vertex_t p : perm) {
    if (p >= n || hit[p])
      throw input_error("relabel_graph: not a permutation of the vertex ids");
    hit[p] = true;
  }
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(g.num_edges());
  for (vertex_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), v); it != nb.end(); ++it)
      edges.emplace_back(perm[v], perm[*it]);
  }
  return build_graph(std::move(edges), n);
}

// Relabels with a seeded uniform random permutation (Fisher-Yates driven by
// rejection-sampled bounded draws, so the permutation is platform-stable).
// Returns the relabeled graph and the permutation (old id -> new id).
inline std::pair<Graph, std::vector<vertex_t>> shuffle_vertices(const Graph& g,
                                                                std::uint64_t seed) {
  const vertex_t n = g.num_vertices();
  std::vector<vertex_t> perm(n);
  std::iota(perm.begin(), perm.end(), vertex_t{0});
  std::mt19937_64 rng(seed);
  for (vertex_t i = n; i > 1; --i) {
    const auto j = static_cast<vertex_t>(detail::uniform_below(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return {relabel_graph(g, perm), std::move(perm)};
}

}  // namespace gcol
