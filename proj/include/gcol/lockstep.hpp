#pragma once

#include <cstdint>
#include <vector>

#include "gcol/coloring.hpp"
#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/types.hpp"

namespace gcol {

// Result of a lockstep (SIMT-style) recoloring simulation.
struct LockstepOutcome {
  bool converged = false;
  std::uint64_t rounds_executed = 0;
  // One snapshot per executed round, in order; the initial all-uncolored
  // state is not included.
  std::vector<Coloring> color_trace;
};

// Deterministic model of lanes recoloring in lockstep.
//
// Every round, each lane recomputes the smallest available color for each of
// its vertices in ascending id order. A lane sees the previous round's
// snapshot plus its own earlier writes from the current round; writes from
// other lanes land only when the round commits, all at once. The run stops as
// soon as a committed snapshot is proper and complete, or after round_cap
// rounds.
//
// Two adjacent vertices in different lanes can mirror each other's moves
// round after round and never converge; that is the livelock this model
// exhibits. Keeping every edge inside one lane restores the sequential order
// along that edge, and the run converges within |V| rounds.
//
// Intended for small models: the trace holds one full coloring per round.
inline LockstepOutcome lockstep_color(const Graph& g,
                                      const std::vector<unsigned>& lane_of,
                                      std::uint64_t round_cap) {
  const vertex_t n = g.num_vertices();
  if (lane_of.size() != n)
    throw input_error("lockstep_color: lane assignment must cover every vertex");
  if (round_cap < 1) throw input_error("lockstep_color: round_cap must be at least 1");

  LockstepOutcome outcome;
  Coloring current(n);
  if (verify_coloring(g, current).ok()) {
    outcome.converged = true;  // vacuously proper (empty graph)
    return outcome;
  }

  ForbiddenMarks marks(g.max_degree() + 1);
  for (std::uint64_t round = 1; round <= round_cap; ++round) {
    Coloring next = current;
    // A single ascending sweep with the per-edge read rule below reproduces
    // each lane's sequential order exactly, since lanes only observe their
    // own writes within a round.
    for (vertex_t v = 0; v < n; ++v) {
      const auto nb = g.neighbors(v);
      const color_t limit = static_cast<color_t>(nb.size());
      marks.next_epoch();
      for (const vertex_t w : nb) {
        const bool own_earlier_write = lane_of[w] == lane_of[v] && w < v;
        const color_t cw = own_earlier_write ? next.colors[w] : current.colors[w];
        if (cw >= 0 && cw <= limit) marks.mark(cw);
      }
      next.colors[v] = marks.smallest_unmarked(limit);
    }
    current = std::move(next);
    outcome.color_trace.push_back(current);
    outcome.rounds_executed = round;
    if (verify_coloring(g, current).ok()) {
      outcome.converged = true;
      break;
    }
  }
  return outcome;
}

}  // namespace gcol
