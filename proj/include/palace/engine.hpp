#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "palace/graph.hpp"
#include "palace/probes.hpp"

namespace palace {

/// Candidate sets are fixed-width bit masks indexed by vertex order.
using Mask = std::uint64_t;

/// Widest palace the possibility-set machinery handles.
inline constexpr int kEngineVertexCap = 64;
/// Cap for the exact solver, whose state space is all 2^n candidate sets.
inline constexpr int kSolverVertexCap = 22;

Mask full_mask(const Palace& g);

/// One game day: survivors of the probe, then one forced move along an edge.
/// Returns N(candidates \ {probe}).
Mask step(const Palace& g, Mask candidates, Vertex probe);

/// A walk the evader can take that defeats the probe schedule: rooms[d-1] is
/// occupied at noon of day d, consecutive rooms are adjacent, and no room
/// coincides with that day's probe.
struct EscapeWalk {
  std::vector<Vertex> rooms;
};

struct VerificationResult {
  bool caught = false;
  int capture_day = 0;              // first day the candidate set empties
  std::optional<EscapeWalk> walk;   // present iff not caught
  std::vector<Mask> trace;          // pre-probe candidate sets, day 1 onward
};

/// Plays a probe sequence against every evader behavior at once by iterating
/// candidate sets from the full vertex set.
VerificationResult verify_strategy(const Palace& g, const ProbeSequence& p);

/// Reconstructs a surviving walk from a verification trace by backward
/// chaining (lowest-ordered choice per day). Throws NoEscape if the trace
/// ends empty.
EscapeWalk extract_escape_walk(const Palace& g, const ProbeSequence& p,
                               const std::vector<Mask>& trace);

struct SolveOptions {
  std::optional<int> max_days;
  /// Frontier sets dominated by an already-expanded subset are dropped.
  /// Optional optimization; results are identical either way.
  bool dominance_pruning = true;
};

struct SolveResult {
  bool solvable = false;
  int days = 0;             // minimum days, when solvable
  ProbeSequence witness;    // lexicographically least optimal schedule
};

/// Exact minimum capture time by breadth-first search over candidate sets.
/// Unsolvable iff the empty set is unreachable. Deterministic witness.
SolveResult min_days_exact(const Palace& g, const SolveOptions& opts = {});

/// State budget for enumerate_optimal; PALACE_STATE_LIMIT overrides.
std::uint64_t enumeration_state_limit();

/// All winning probe sequences of length exactly `days`, where `days` must
/// be the exact optimum. Depth-first search pruned by exact clearing
/// distances memoized per candidate set; complete and duplicate-free, in
/// lexicographic order.
std::vector<ProbeSequence> enumerate_optimal(
    const Palace& g, int days,
    std::optional<std::uint64_t> state_limit = std::nullopt);

}  // namespace palace
