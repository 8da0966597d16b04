// gcol: generate, color, verify, and benchmark graphs from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gcol/gcol.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;   // parse errors, bad ids, bad parameters
constexpr int kExitVerify = 3;  // coloring failed verification
constexpr int kExitIo = 4;      // file could not be opened or written

gcol::Graph load_graph(const std::string& path, const std::string& format) {
  std::string effective = format;
  if (effective == "auto") {
    const std::string ext = std::filesystem::path(path).extension().string();
    effective = (ext == ".mtx" || ext == ".mm") ? "mm" : "edgelist";
  }
  std::ifstream in(path);
  if (!in) throw gcol::io_error("cannot open '" + path + "' for reading");
  if (effective == "mm") return gcol::load_matrix_market(in);
  return gcol::load_edge_list(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw gcol::io_error("cannot open '" + path + "' for writing");
  return out;
}

void flush_or_throw(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw gcol::io_error("failed writing '" + path + "'");
}

// GCOL_CHUNK_SIZE overrides the scheduler's default chunk size.
gcol::ParallelOptions options_from_env() {
  gcol::ParallelOptions opt;
  if (const char* raw = std::getenv("GCOL_CHUNK_SIZE")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0)
      throw gcol::input_error("GCOL_CHUNK_SIZE must be a positive integer, got '" +
                              std::string(raw) + "'");
    opt.chunk_size = static_cast<std::size_t>(value);
  }
  return opt;
}

gcol::Algorithm parse_algorithm_or_throw(const std::string& name) {
  const auto alg = gcol::algorithm_from_string(name);
  if (!alg)
    throw gcol::input_error("unknown algorithm '" + name +
                            "' (expected seq, catalyurek, or rsoc)");
  return *alg;
}

std::vector<gcol::color_t> read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gcol::io_error("cannot open '" + path + "' for reading");
  std::vector<gcol::color_t> colors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;  // blank line
    std::string extra;
    if (tokens >> extra)
      throw gcol::parse_error("expected one color per line", line_no);
    long value = 0;
    std::size_t consumed = 0;
    try {
      value = std::stol(token, &consumed);
    } catch (const std::invalid_argument&) {
      throw gcol::parse_error("expected an integer color, got '" + token + "'",
                              line_no);
    } catch (const std::out_of_range&) {
      throw gcol::parse_error("color value out of range", line_no);
    }
    if (consumed != token.size())
      throw gcol::parse_error("expected an integer color, got '" + token + "'",
                              line_no);
    if (value < -1 || value > std::numeric_limits<gcol::color_t>::max())
      throw gcol::parse_error("color value out of range", line_no);
    colors.push_back(static_cast<gcol::color_t>(value));
  }
  return colors;
}

struct GenerateArgs {
  std::string preset;
  unsigned scale = 0;
  std::uint64_t edge_factor = 8;
  std::uint64_t seed = 1;
  bool shuffle = false;
  std::string output;
  std::optional<double> a, b, c, d;
};

int cmd_generate(const GenerateArgs& args) {
  auto params = gcol::rmat_preset(args.preset);
  if (!params)
    throw gcol::input_error("unknown preset '" + args.preset +
                            "' (expected rmat-er, rmat-g, or rmat-b)");
  params->scale = args.scale;
  params->edge_factor = args.edge_factor;
  params->seed = args.seed;
  if (args.a) params->a = *args.a;
  if (args.b) params->b = *args.b;
  if (args.c) params->c = *args.c;
  if (args.d) params->d = *args.d;

  gcol::Graph g = gcol::generate_rmat(*params);
  if (args.shuffle) g = gcol::shuffle_vertices(g, args.seed).first;

  auto out = open_output(args.output);
  gcol::save_edge_list(out, g);
  flush_or_throw(out, args.output);

  std::cout << "vertices " << g.num_vertices() << "\n"
            << "edges " << g.num_edges() << "\n"
            << "max_degree " << g.max_degree() << "\n";
  return kExitOk;
}

struct ColorArgs {
  std::string input;
  std::string format = "auto";
  std::string algorithm = "seq";
  unsigned threads = 1;
  std::string output;
  std::string coloring_output;
};

int cmd_color(const ColorArgs& args) {
  const gcol::Graph g = load_graph(args.input, args.format);
  const gcol::Algorithm alg = parse_algorithm_or_throw(args.algorithm);
  const gcol::ParallelOptions opt = options_from_env();

  const gcol::ColoringRun run = gcol::run_coloring(g, alg, args.threads, opt);

  const gcol::ConflictReport report = gcol::verify_coloring(g, run.coloring);
  if (!report.ok()) {
    std::cerr << "verification failed: " << report.violations.size()
              << " violation(s)\n";
    return kExitVerify;
  }

  nlohmann::json stats = gcol::to_json(run.stats);
  stats["graph_stats"] = {{"num_vertices", g.num_vertices()},
                          {"num_edges", g.num_edges()},
                          {"max_degree", g.max_degree()}};

  if (!args.coloring_output.empty()) {
    auto out = open_output(args.coloring_output);
    for (const gcol::color_t c : run.coloring.colors) out << c << '\n';
    flush_or_throw(out, args.coloring_output);
  }

  if (args.output.empty()) {
    std::cout << stats.dump(2) << "\n";
  } else {
    auto out = open_output(args.output);
    out << stats.dump(2) << "\n";
    flush_or_throw(out, args.output);
    std::cout << "colored " << g.num_vertices() << " vertices with "
              << run.stats.num_colors << " colors in "
              << run.stats.wall_time_ns / 1000000.0 << " ms ("
              << run.stats.rounds << " round(s), " << run.stats.conflicts_total
              << " conflict(s))\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string format = "auto";
  std::string coloring;
};

int cmd_verify(const VerifyArgs& args) {
  const gcol::Graph g = load_graph(args.input, args.format);
  gcol::Coloring coloring;
  coloring.colors = read_coloring_file(args.coloring);
  if (coloring.size() != g.num_vertices())
    throw gcol::input_error("coloring has " + std::to_string(coloring.size()) +
                            " entries but the graph has " +
                            std::to_string(g.num_vertices()) + " vertices");

  const gcol::ConflictReport report = gcol::verify_coloring(g, coloring);
  if (report.ok()) {
    std::cout << "proper coloring with " << gcol::count_colors(coloring)
              << " colors\n";
    return kExitOk;
  }
  constexpr std::size_t kMaxShown = 20;
  for (std::size_t i = 0; i < report.violations.size() && i < kMaxShown; ++i) {
    const auto& v = report.violations[i];
    if (v.v == gcol::kNoVertex)
      std::cout << "vertex " << v.u << " is uncolored\n";
    else
      std::cout << "edge (" << v.u << ", " << v.v << "): both endpoints have color "
                << v.color << "\n";
  }
  if (report.violations.size() > kMaxShown)
    std::cout << "... and " << report.violations.size() - kMaxShown << " more\n";
  std::cout << report.violations.size() << " violation(s)\n";
  return kExitVerify;
}

struct BenchArgs {
  std::string input;
  std::string format = "auto";
  std::vector<std::string> algorithms{"seq", "catalyurek", "rsoc"};
  std::vector<unsigned> threads{1};
  std::uint32_t repeats = 10;
  std::string output;
  std::string csv;
};

int cmd_bench(const BenchArgs& args) {
  const gcol::Graph g = load_graph(args.input, args.format);
  const gcol::ParallelOptions opt = options_from_env();
  const std::string graph_name =
      std::filesystem::path(args.input).filename().string();

  std::vector<gcol::BenchReport> reports;
  for (const std::string& name : args.algorithms) {
    const gcol::Algorithm alg = parse_algorithm_or_throw(name);
    reports.push_back(
        gcol::run_benchmark(g, graph_name, alg, args.threads, args.repeats, opt));
  }

  if (!args.output.empty()) {
    for (const gcol::BenchReport& report : reports) {
      std::filesystem::path path(args.output);
      if (reports.size() > 1) {
        const std::string stem = path.stem().string();
        const std::string ext = path.extension().string();
        path.replace_filename(stem + "-" + std::string(to_string(report.algorithm)) +
                              ext);
      }
      auto out = open_output(path.string());
      out << gcol::to_json(report).dump(2) << "\n";
      flush_or_throw(out, path.string());
    }
  }

  if (!args.csv.empty()) {
    auto out = open_output(args.csv);
    out << gcol::kCsvHeader << '\n';
    for (const gcol::BenchReport& report : reports) gcol::write_csv_rows(out, report);
    flush_or_throw(out, args.csv);
  }

  std::cout << "graph " << graph_name << ": " << g.num_vertices() << " vertices, "
            << g.num_edges() << " edges, max degree " << g.max_degree() << "\n";
  std::cout << std::left << std::setw(12) << "algorithm" << std::right
            << std::setw(9) << "threads" << std::setw(14) << "mean ms"
            << std::setw(12) << "rounds" << std::setw(12) << "conflicts"
            << std::setw(10) << "colors" << "\n";
  for (const gcol::BenchReport& report : reports) {
    for (const gcol::ThreadAggregate& agg : report.aggregate) {
      std::cout << std::left << std::setw(12) << to_string(report.algorithm)
                << std::right << std::setw(9) << agg.thread_count << std::setw(14)
                << std::fixed << std::setprecision(3)
                << agg.wall_time_ns_mean / 1e6 << std::setw(12)
                << std::setprecision(2) << agg.rounds_mean << std::setw(12)
                << std::setprecision(1) << agg.conflicts_total_mean
                << std::setw(10) << agg.num_colors_median << "\n";
    }
  }
  for (std::size_t j = 0; j < reports.size(); ++j) {
    for (std::size_t i = j + 1; i < reports.size(); ++i) {
      const auto speedups = gcol::relative_speedup(reports[i], reports[j]);
      for (const auto& [tc, ratio] : speedups) {
        std::cout << "speedup of " << to_string(reports[i].algorithm)
                  << " over " << to_string(reports[j].algorithm) << " at " << tc
                  << " thread(s): " << std::setprecision(3) << ratio << "\n";
      }
    }
  }
  return kExitOk;
}

struct LockstepArgs {
  std::string input;
  std::string format = "auto";
  unsigned lanes = 0;  // 0 = one lane per vertex
  std::uint64_t cap = 100;
};

int cmd_lockstep(const LockstepArgs& args) {
  const gcol::Graph g = load_graph(args.input, args.format);
  const unsigned lanes =
      args.lanes == 0 ? std::max<unsigned>(1, g.num_vertices()) : args.lanes;
  std::vector<unsigned> lane_of(g.num_vertices());
  for (gcol::vertex_t v = 0; v < g.num_vertices(); ++v) lane_of[v] = v % lanes;

  const gcol::LockstepOutcome out = gcol::lockstep_color(g, lane_of, args.cap);

  if (out.converged)
    std::cout << "converged after " << out.rounds_executed << " round(s)\n";
  else
    std::cout << "no convergence within " << out.rounds_executed
              << " round(s) (cap " << args.cap << ")\n";

  constexpr gcol::vertex_t kTraceLimit = 64;
  if (g.num_vertices() <= kTraceLimit) {
    for (std::size_t r = 0; r < out.color_trace.size(); ++r) {
      std::cout << "round " << r + 1 << ":";
      for (const gcol::color_t c : out.color_trace[r].colors) std::cout << ' ' << c;
      std::cout << "\n";
    }
  } else {
    std::cout << "(trace suppressed for graphs over " << kTraceLimit
              << " vertices)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel graph coloring toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand(
      "generate", "Generate an R-MAT graph and write it as an edge list");
  generate->add_option("preset", gen.preset, "rmat-er, rmat-g, or rmat-b")
      ->required();
  generate->add_option("--scale", gen.scale, "log2 of the vertex count")
      ->required();
  generate->add_option("--edge-factor", gen.edge_factor,
                       "directed samples per vertex (default 8)");
  generate->add_option("--seed", gen.seed, "generator seed (default 1)");
  generate->add_flag("--shuffle", gen.shuffle,
                     "relabel vertices with a seeded random permutation");
  generate->add_option("--output", gen.output, "edge list file to write")
      ->required();
  generate->add_option("--a", gen.a, "override quadrant probability a");
  generate->add_option("--b", gen.b, "override quadrant probability b");
  generate->add_option("--c", gen.c, "override quadrant probability c");
  generate->add_option("--d", gen.d, "override quadrant probability d");

  ColorArgs col;
  auto* color = app.add_subcommand("color", "Color a graph and report statistics");
  color->add_option("input", col.input, "graph file")->required();
  color->add_option("--format", col.format, "mm or edgelist (default: by extension)")
      ->check(CLI::IsMember({"auto", "mm", "edgelist"}));
  color->add_option("--algorithm", col.algorithm, "seq, catalyurek, or rsoc");
  color->add_option("--threads", col.threads, "worker thread count (default 1)")
      ->check(CLI::PositiveNumber);
  color->add_option("--output", col.output,
                    "stats JSON file (default: print to stdout)");
  color->add_option("--coloring-output", col.coloring_output,
                    "write the coloring, one color per line");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a coloring file against a graph");
  verify->add_option("input", ver.input, "graph file")->required();
  verify->add_option("--coloring", ver.coloring, "coloring file, one color per line")
      ->required();
  verify->add_option("--format", ver.format, "mm or edgelist (default: by extension)")
      ->check(CLI::IsMember({"auto", "mm", "edgelist"}));

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Benchmark coloring algorithms");
  bench->add_option("input", ben.input, "graph file")->required();
  bench->add_option("--format", ben.format, "mm or edgelist (default: by extension)")
      ->check(CLI::IsMember({"auto", "mm", "edgelist"}));
  bench->add_option("--algorithms", ben.algorithms,
                    "comma-separated list (default seq,catalyurek,rsoc)")
      ->delimiter(',');
  bench->add_option("--threads", ben.threads,
                    "comma-separated thread counts (default 1)")
      ->delimiter(',');
  bench->add_option("--repeats", ben.repeats, "runs per thread count (default 10)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--output", ben.output,
                    "JSON report file (per algorithm: stem-<name>.json)");
  bench->add_option("--csv", ben.csv, "CSV file with one row per run");

  LockstepArgs lock;
  auto* lockstep = app.add_subcommand(
      "lockstep", "Simulate lanes recoloring in lockstep");
  lockstep->add_option("input", lock.input, "graph file")->required();
  lockstep->add_option("--format", lock.format,
                       "mm or edgelist (default: by extension)")
      ->check(CLI::IsMember({"auto", "mm", "edgelist"}));
  lockstep->add_option("--lanes", lock.lanes,
                       "lane count; vertices go round-robin (default: one per vertex)");
  lockstep->add_option("--cap", lock.cap, "round cap (default 100)")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (color->parsed()) return cmd_color(col);
    if (verify->parsed()) return cmd_verify(ver);
    if (bench->parsed()) return cmd_bench(ben);
    if (lockstep->parsed()) return cmd_lockstep(lock);
  } catch (const gcol::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gcol::unsupported_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gcol::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gcol::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gcol::verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const gcol::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
