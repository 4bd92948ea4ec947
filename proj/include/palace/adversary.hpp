#pragma once

#include <array>
#include <vector>

#include "palace/characterize.hpp"
#include "palace/engine.hpp"
#include "palace/graph.hpp"
#include "palace/probes.hpp"

namespace palace {

enum class Parity { Even, Odd };

/// Evader strategy for a palace containing a cycle: stay on the cycle,
/// moving each night to a cycle-neighbor that is not probed the next day
/// (ties and the start break toward the lowest-ordered vertex; the start
/// prefers cycle positions of the given parity). Always survives.
EscapeWalk cycle_evader(const Palace& g, const std::vector<Vertex>& cycle,
                        const ProbeSequence& probes, Parity start_parity);

/// Evader strategy on a forbidden-spider witness, clairvoyant in the probe
/// sequence. Probes outside the witness are misses; the walk never leaves
/// the ten witness vertices. Survives every sequence; RulesViolated signals
/// an implementation bug, never a legitimate outcome.
EscapeWalk spider_evader(const Palace& g, const SpiderWitness& w,
                         const ProbeSequence& probes);

/// A star: center x with k >= 2 disjoint two-vertex branches (a_i, b_i).
struct StarInstance {
  Vertex center;
  std::vector<std::array<Vertex, 2>> branches;

  int k() const { return static_cast<int>(branches.size()); }
};

/// Derives the star instance around `center`: every neighbor a starts a
/// branch, continued by a's lowest neighbor besides the center.
StarInstance star_instance(const Palace& g, Vertex center);

struct StarEvasion {
  bool survived = false;
  int caught_day = 0;  // set when not survived
  EscapeWalk walk;     // rooms up to the last day played
};

/// Evader strategy on a star, committed to occupying the white class
/// ({x, b_i}) on days of the given parity. Can legitimately be defeated;
/// survives whenever the schedule lacks a run of k-1 probes of x on
/// consecutive white days.
StarEvasion star_evader(const Palace& g, const StarInstance& s,
                        const ProbeSequence& probes, Parity white_days);

}  // namespace palace
