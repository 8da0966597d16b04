// Integration tests for the gcol command line tool. Runs the binary given as
// argv[1] against temporary files and checks exit codes and output.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "gcol/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                          \
  do {                                                                        \
    if (!(cond)) {                                                            \
      ++g_failures;                                                           \
      std::cerr << "FAILED at " << __FILE__ << ":" << __LINE__ << ": " #cond  \
                << "\n";                                                      \
    }                                                                         \
  } while (0)

struct CmdResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

CmdResult run(const std::string& command) {
  CmdResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << command << "\n";
    ++g_failures;
    return result;
  }
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe)) result.output += buffer;
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-gcol-binary>\n";
    return 2;
  }
  const std::string gcol = argv[1];
  const fs::path dir =
      fs::temp_directory_path() / ("gcol_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const std::string d = dir.string();

  // --- generate ------------------------------------------------------------
  {
    const auto r = run(gcol + " generate rmat-er --scale 6 --edge-factor 8 --seed 3 --output " +
                       d + "/er.el");
    EXPECT(r.status == 0);
    EXPECT(contains(r.output, "vertices 64"));
    EXPECT(contains(r.output, "max_degree"));
    std::ifstream in(dir / "er.el");
    const gcol::Graph g = gcol::load_edge_list(in, gcol::vertex_t{64});
    g.validate();
    EXPECT(g.num_vertices() == 64);
    EXPECT(g.num_edges() > 0);
  }
  {
    // Same seed, same bytes; applies to --shuffle too.
    const std::string flags = " generate rmat-b --scale 7 --seed 11 --shuffle --output ";
    EXPECT(run(gcol + flags + d + "/b1.el").status == 0);
    EXPECT(run(gcol + flags + d + "/b2.el").status == 0);
    EXPECT(slurp(dir / "b1.el") == slurp(dir / "b2.el"));
  }
  {
    // Bad preset and bad probabilities are input errors.
    EXPECT(run(gcol + " generate rmat-x --scale 4 --output " + d + "/x.el").status == 2);
    EXPECT(run(gcol + " generate rmat-er --scale 4 --a 0.9 --output " + d +
               "/x.el").status == 2);
    // Unwritable output path is an I/O error.
    EXPECT(run(gcol + " generate rmat-er --scale 4 --output " + d +
               "/no_such_dir/x.el").status == 4);
  }

  // --- color ---------------------------------------------------------------
  write_file(dir / "path.el", "0 1\n1 2\n");
  {
    const auto r = run(gcol + " color " + d + "/path.el --algorithm seq");
    EXPECT(r.status == 0);
    EXPECT(contains(r.output, "\"algorithm\": \"seq\""));
    EXPECT(contains(r.output, "\"num_colors\": 2"));
    EXPECT(contains(r.output, "\"rounds\": 1"));
  }
  {
    const auto r = run(gcol + " color " + d + "/path.el --algorithm rsoc --threads 3 --output " +
                       d + "/stats.json --coloring-output " + d + "/colors.txt");
    EXPECT(r.status == 0);
    EXPECT(contains(slurp(dir / "stats.json"), "\"barrier_events\": 2"));
    EXPECT(slurp(dir / "colors.txt") == "0\n1\n0\n");
  }
  {
    // Chunk size override from the environment; invalid values are rejected.
    EXPECT(run("GCOL_CHUNK_SIZE=16 " + gcol + " color " + d +
               "/path.el --algorithm catalyurek --threads 2").status == 0);
    EXPECT(run("GCOL_CHUNK_SIZE=banana " + gcol + " color " + d +
               "/path.el --algorithm catalyurek").status == 2);
    EXPECT(run("GCOL_CHUNK_SIZE=0 " + gcol + " color " + d +
               "/path.el --algorithm catalyurek").status == 2);
  }
  {
    // Unknown algorithm, missing file, malformed file.
    EXPECT(run(gcol + " color " + d + "/path.el --algorithm magic").status == 2);
    EXPECT(run(gcol + " color " + d + "/absent.el").status == 4);
    write_file(dir / "broken.el", "0 zebra\n");
    const auto r = run(gcol + " color " + d + "/broken.el");
    EXPECT(r.status == 2);
    EXPECT(contains(r.output, "line 1"));
  }

  // --- matrix market input -------------------------------------------------
  write_file(dir / "tri.mtx",
             "%%MatrixMarket matrix coordinate pattern symmetric\n"
             "3 3 3\n"
             "2 1\n"
             "3 1\n"
             "3 2\n");
  {
    const auto r = run(gcol + " color " + d + "/tri.mtx --algorithm rsoc --threads 4");
    EXPECT(r.status == 0);
    EXPECT(contains(r.output, "\"num_colors\": 3"));
    // Extension-based detection matched the explicit flag.
    const auto rf = run(gcol + " color " + d + "/tri.mtx --format mm");
    EXPECT(rf.status == 0);
  }
  {
    write_file(dir / "complex.mtx",
               "%%MatrixMarket matrix coordinate complex general\n"
               "2 2 1\n"
               "1 2 1.0 0.0\n");
    EXPECT(run(gcol + " color " + d + "/complex.mtx").status == 2);
  }

  // --- verify --------------------------------------------------------------
  {
    write_file(dir / "good.col", "0\n1\n0\n");
    const auto ok = run(gcol + " verify " + d + "/path.el --coloring " + d + "/good.col");
    EXPECT(ok.status == 0);
    EXPECT(contains(ok.output, "proper coloring with 2 colors"));

    write_file(dir / "bad.col", "0\n0\n1\n");
    const auto bad = run(gcol + " verify " + d + "/path.el --coloring " + d + "/bad.col");
    EXPECT(bad.status == 3);
    EXPECT(contains(bad.output, "edge (0, 1)"));

    write_file(dir / "hole.col", "0\n-1\n0\n");
    const auto hole = run(gcol + " verify " + d + "/path.el --coloring " + d + "/hole.col");
    EXPECT(hole.status == 3);
    EXPECT(contains(hole.output, "vertex 1 is uncolored"));

    write_file(dir / "short.col", "0\n1\n");
    EXPECT(run(gcol + " verify " + d + "/path.el --coloring " + d + "/short.col").status == 2);

    write_file(dir / "junk.col", "0\nx\n1\n");
    EXPECT(run(gcol + " verify " + d + "/path.el --coloring " + d + "/junk.col").status == 2);
  }

  // --- bench ---------------------------------------------------------------
  {
    const auto r = run(gcol + " bench " + d + "/er.el --algorithms seq,rsoc --threads 1,2 "
                       "--repeats 2 --output " + d + "/rep.json --csv " + d + "/runs.csv");
    EXPECT(r.status == 0);
    EXPECT(contains(r.output, "speedup of rsoc over seq"));
    EXPECT(fs::exists(dir / "rep-seq.json"));
    EXPECT(fs::exists(dir / "rep-rsoc.json"));
    const std::string csv = slurp(dir / "runs.csv");
    EXPECT(contains(csv,
                    "algorithm,threads,run_index,rounds,conflicts_total,"
                    "num_colors,wall_time_ns"));
    // Header + 2 algorithms * 2 thread counts * 2 repeats rows.
    EXPECT(std::count(csv.begin(), csv.end(), '\n') == 9);
    EXPECT(contains(slurp(dir / "rep-rsoc.json"), "\"algorithm\": \"rsoc\""));
  }
  {
    // Single algorithm writes to the exact path given.
    const auto r = run(gcol + " bench " + d + "/er.el --algorithms catalyurek "
                       "--threads 1 --repeats 2 --output " + d + "/single.json");
    EXPECT(r.status == 0);
    EXPECT(fs::exists(dir / "single.json"));
  }

  // --- lockstep ------------------------------------------------------------
  write_file(dir / "pair.el", "0 1\n");
  {
    const auto livelock = run(gcol + " lockstep " + d + "/pair.el --lanes 2 --cap 6");
    EXPECT(livelock.status == 0);
    EXPECT(contains(livelock.output, "no convergence within 6 round(s)"));
    EXPECT(contains(livelock.output, "round 1: 0 0"));
    EXPECT(contains(livelock.output, "round 2: 1 1"));
    EXPECT(contains(livelock.output, "round 6: 1 1"));

    const auto serial = run(gcol + " lockstep " + d + "/pair.el --lanes 1 --cap 6");
    EXPECT(serial.status == 0);
    EXPECT(contains(serial.output, "converged after 1 round(s)"));
    EXPECT(contains(serial.output, "round 1: 0 1"));
  }

  // --- usage errors come from the parser, not our exit codes ----------------
  {
    EXPECT(run(gcol).status != 0);
    EXPECT(run(gcol + " color").status != 0);
    const auto help = run(gcol + " --help");
    EXPECT(help.status == 0);
    EXPECT(contains(help.output, "generate"));
    EXPECT(contains(help.output, "lockstep"));
  }

  fs::remove_all(dir);
  if (g_failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << g_failures << " cli test(s) failed\n";
  return 1;
}
