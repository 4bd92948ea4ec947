#pragma once

#include <string>
#include <vector>

#include "palace/graph.hpp"

namespace palace {

/// The searcher's schedule: the vertex probed at noon of day d is
/// probes[d-1] (days are 1-based).
struct ProbeSequence {
  std::vector<Vertex> probes;

  int days() const { return static_cast<int>(probes.size()); }

  bool operator==(const ProbeSequence&) const = default;
};

/// Resolves labels to vertices; throws UnknownVertex on a bad label.
ProbeSequence probes_from_labels(const Palace& g,
                                 const std::vector<std::string>& labels);

std::vector<std::string> probe_labels(const Palace& g,
                                      const ProbeSequence& p);

}  // namespace palace
