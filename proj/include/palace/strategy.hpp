#pragma once

#include <vector>

#include "palace/graph.hpp"
#include "palace/probes.hpp"

namespace palace {

/// Walk from p_1 to p_{l-1} along the maximal path that detours once to each
/// off-path non-leaf vertex (ascending order, on first arrival). Never leaves
/// the path on two consecutive days, never revisits an off-path vertex, never
/// moves back down the path. Length (l-1) + 2q with q off-path detours.
ProbeSequence linear_search(const Palace& g, const PathDecomposition& p);

/// Convenience overload using longest_path(g).
ProbeSequence linear_search(const Palace& g);

/// The forward linear search followed by its exact reversal, restarting at
/// p_{l-1}; the optimal schedule of length 2m - 4 for the m-vertex reduction.
/// Verified against the engine before returning (palaces up to the engine
/// width).
ProbeSequence linear_strategy(const Palace& g);

/// Minimum days to guarantee capture: 1 or 2 for the one- and two-vertex
/// palaces, otherwise 2m - 4 where m counts the reduced palace's vertices.
/// Throws Unsolvable when no finite schedule exists.
int optimal_length(const Palace& g);

/// Leaves (B), vertices adjacent to leaves (A), everything else (Q).
struct VertexPartition {
  std::vector<Vertex> leaf_neighbors;  // A
  std::vector<Vertex> leaves;          // B
  std::vector<Vertex> interior;        // Q
};

/// The A/B/Q partition of a reduced solvable tree with more than four
/// vertices. Validates the structural facts the partition is used for:
/// |A| = |B|, A-degrees are exactly 2, no two A-vertices are adjacent, and
/// sum of Q-degrees = 2(m-1) - 3|A|.
VertexPartition vertex_partition(const Palace& g);

/// Per-vertex counting bound 2|A| + sum_{v in Q} (2 d(v) - 2); always equals
/// 2m - 4 on its domain.
int lower_bound(const Palace& g);

/// True iff the schedule realizes both values of (day + probe color) mod 2.
/// Every winning schedule must.
bool changes_parity(const Palace& g, const ProbeSequence& p);

/// All maximal (diameter) paths of a tree, in both orientations.
std::vector<PathDecomposition> all_maximal_paths(const Palace& g);

/// Whether the schedule consists of two back-to-back linear searches of
/// opposite parity, each along some maximal path. This is the conjectured
/// shape of every optimal schedule; reported informationally.
bool is_linear_strategy(const Palace& g, const ProbeSequence& p);

}  // namespace palace
