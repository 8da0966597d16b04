#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/types.hpp"

namespace gcol {

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline bool parse_u64(std::string_view token, std::uint64_t& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

inline bool parse_i64(std::string_view token, std::int64_t& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

inline bool parse_double(std::string_view token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline vertex_t parse_vertex_id(std::string_view token, std::size_t line_no) {
  std::uint64_t id = 0;
  if (!parse_u64(token, id))
    throw parse_error("expected a non-negative integer vertex id, got '" +
                          std::string(token) + "'",
                      line_no);
  // Ids must leave room for num_vertices = max id + 1 in a 32-bit id space.
  if (id >= kNoVertex)
    throw parse_error("vertex id " + std::to_string(id) + " does not fit 32 bits",
                      line_no);
  return static_cast<vertex_t>(id);
}

}  // namespace detail

// Whitespace-separated "u v" pairs, one edge per line. Lines starting with
// '#' and blank lines are ignored. Ids are 0-based. When num_vertices is not
// given it defaults to 1 + the largest id seen (0 for empty input); trailing
// isolated vertices are preserved only with an explicit count.
inline Graph load_edge_list(std::istream& in,
                            std::optional<vertex_t> num_vertices = std::nullopt) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::string line;
  std::size_t line_no = 0;
  vertex_t max_id = 0;
  bool saw_vertex = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 2)
      throw parse_error("expected two vertex ids, got " +
                            std::to_string(tokens.size()) + " token(s)",
                        line_no);
    const vertex_t u = detail::parse_vertex_id(tokens[0], line_no);
    const vertex_t v = detail::parse_vertex_id(tokens[1], line_no);
    max_id = std::max({max_id, u, v});
    saw_vertex = true;
    edges.emplace_back(u, v);
  }
  const vertex_t n = num_vertices ? *num_vertices : (saw_vertex ? max_id + 1 : 0);
  return build_graph(std::move(edges), n);
}

// Writes the graph as an edge list readable by load_edge_list, one "u v" line
// per edge with u < v, ascending. A leading comment records the vertex count.
inline void save_edge_list(std::ostream& out, const Graph& g) {
  out << "# " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), v); it != nb.end(); ++it)
      out << v << ' ' << *it << '\n';
  }
}

// Matrix Market coordinate reader. Accepts pattern, real, and integer fields
// with general or symmetric symmetry; values are parsed and discarded, and
// diagonal entries are dropped. Vertices are the union of row and column
// index spaces: num_vertices = max(rows, cols). Array format, complex fields,
// and skew-symmetric/Hermitian symmetry raise unsupported_format_error.
inline Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line))
    throw parse_error("empty Matrix Market source", line_no);

  const auto banner = detail::split_tokens(line);
  if (banner.size() != 5 || detail::lowercase(banner[0]) != "%%matrixmarket")
    throw parse_error("malformed Matrix Market banner", line_no);
  const std::string object = detail::lowercase(banner[1]);
  const std::string format = detail::lowercase(banner[2]);
  const std::string field = detail::lowercase(banner[3]);
  const std::string symmetry = detail::lowercase(banner[4]);
  if (object != "matrix")
    throw unsupported_format_error("unsupported Matrix Market object: " + object);
  if (format == "array")
    throw unsupported_format_error("array format is not supported");
  if (format != "coordinate")
    throw parse_error("unknown Matrix Market format: " + format, line_no);
  if (field == "complex")
    throw unsupported_format_error("complex field is not supported");
  if (field != "pattern" && field != "real" && field != "integer")
    throw parse_error("unknown Matrix Market field: " + field, line_no);
  if (symmetry == "skew-symmetric" || symmetry == "hermitian")
    throw unsupported_format_error("unsupported symmetry: " + symmetry);
  if (symmetry != "general" && symmetry != "symmetric")
    throw parse_error("unknown Matrix Market symmetry: " + symmetry, line_no);

  // Size line: first non-comment, non-blank line after the banner.
  std::uint64_t rows = 0, cols = 0, entries = 0;
  bool have_size = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (tokens.size() != 3 || !detail::parse_u64(tokens[0], rows) ||
        !detail::parse_u64(tokens[1], cols) || !detail::parse_u64(tokens[2], entries))
      throw parse_error("expected size line 'rows cols entries'", line_no);
    have_size = true;
    break;
  }
  if (!have_size) throw parse_error("missing size line", line_no);
  const std::uint64_t n64 = std::max(rows, cols);
  if (n64 > std::uint64_t{kNoVertex})
    throw capacity_error("matrix dimension " + std::to_string(n64) +
                         " exceeds the 32-bit vertex id space");
  const auto n = static_cast<vertex_t>(n64);

  const std::size_t expected_tokens = field == "pattern" ? 2 : 3;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(entries);
  std::uint64_t seen = 0;
  while (seen < entries && std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (tokens.size() != expected_tokens)
      throw parse_error("expected " + std::to_string(expected_tokens) +
                            " tokens per entry, got " + std::to_string(tokens.size()),
                        line_no);
    std::uint64_t i = 0, j = 0;
    if (!detail::parse_u64(tokens[0], i) || !detail::parse_u64(tokens[1], j))
      throw parse_error("malformed entry indices", line_no);
    if (expected_tokens == 3) {
      if (field == "real") {
        double value = 0;
        if (!detail::parse_double(tokens[2], value))
          throw parse_error("malformed real value '" + std::string(tokens[2]) + "'",
                            line_no);
      } else {
        std::int64_t value = 0;
        if (!detail::parse_i64(tokens[2], value))
          throw parse_error("malformed integer value '" + std::string(tokens[2]) + "'",
                            line_no);
      }
    }
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw input_error("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") at line " + std::to_string(line_no) +
                        " is outside the declared " + std::to_string(rows) + " x " +
                        std::to_string(cols) + " shape");
    ++seen;
    if (i == j) continue;  // diagonal entries carry no edge
    edges.emplace_back(static_cast<vertex_t>(i - 1), static_cast<vertex_t>(j - 1));
  }
  if (seen < entries)
    throw parse_error("unexpected end of data: got " + std::to_string(seen) +
                          " of " + std::to_string(entries) + " entries",
                      line_no);
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    throw parse_error("unexpected content after the declared entries", line_no);
  }
  // Symmetric and general sources collapse to the same undirected edge set.
  return build_graph(std::move(edges), n);
}

}  // namespace gcol
