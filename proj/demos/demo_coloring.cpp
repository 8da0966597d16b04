// Generates a skewed random graph, colors it with every algorithm at a few
// thread counts, and prints one summary line per run.

#include <cinttypes>
#include <cstdio>
#include <string>

#include "gcol/gcol.hpp"

int main() {
  gcol::RmatParams params = *gcol::rmat_preset("rmat-g");
  params.scale = 12;
  params.edge_factor = 8;
  params.seed = 42;

  const gcol::Graph graph = gcol::shuffle_vertices(gcol::generate_rmat(params), 7).first;
  std::printf("graph: %u vertices, %" PRIu64 " edges, max degree %u\n\n",
              graph.num_vertices(), graph.num_edges(), graph.max_degree());

  std::printf("%-11s %8s %7s %10s %8s %9s %12s\n", "algorithm", "threads",
              "rounds", "conflicts", "barriers", "colors", "wall_ms");
  for (const gcol::Algorithm alg :
       {gcol::Algorithm::seq, gcol::Algorithm::catalyurek, gcol::Algorithm::rsoc}) {
    for (const unsigned threads : {1u, 2u, 4u}) {
      if (alg == gcol::Algorithm::seq && threads != 1) continue;
      const gcol::ColoringRun run = gcol::run_coloring(graph, alg, threads);
      const gcol::ConflictReport report = gcol::verify_coloring(graph, run.coloring);
      std::printf("%-11s %8u %7" PRIu64 " %10" PRIu64 " %8" PRIu64 " %9u %12.3f%s\n",
                  std::string(gcol::to_string(alg)).c_str(), threads,
                  run.stats.rounds, run.stats.conflicts_total,
                  run.stats.barrier_events, run.stats.num_colors,
                  static_cast<double>(run.stats.wall_time_ns) / 1e6,
                  report.ok() ? "" : "  (IMPROPER!)");
    }
  }

  std::printf("\nlivelock in a lockstep execution model (2 vertices, 2 lanes):\n");
  const gcol::Graph pair = gcol::build_graph({{0, 1}}, 2);
  const gcol::LockstepOutcome stuck = gcol::lockstep_color(pair, {0, 1}, 6);
  for (std::size_t r = 0; r < stuck.color_trace.size(); ++r)
    std::printf("  round %zu: colors [%d, %d]\n", r + 1,
                stuck.color_trace[r].colors[0], stuck.color_trace[r].colors[1]);
  std::printf("  converged: %s\n", stuck.converged ? "yes" : "no");
  return 0;
}
