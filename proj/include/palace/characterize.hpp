#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palace/graph.hpp"

namespace palace {

/// An embedded copy of the minimal unsearchable spider: a center with three
/// vertex-disjoint branches of three vertices each. branches[i] lists the
/// branch vertices outward from the center.
struct SpiderWitness {
  Vertex center;
  std::array<std::array<Vertex, 3>, 3> branches;

  std::vector<Vertex> all_vertices() const;
};

/// Finds a forbidden-spider witness in a tree, or nullopt. Deterministic:
/// lowest qualifying center, then lowest branch paths.
std::optional<SpiderWitness> contains_forbidden_spider(const Palace& g);

struct SolvabilityVerdict {
  enum class Kind { Solvable, HasCycle, ContainsT };

  Kind kind;
  std::vector<Vertex> cycle;            // set when HasCycle
  std::optional<SpiderWitness> spider;  // set when ContainsT

  bool solvable() const { return kind == Kind::Solvable; }
};

/// Structural solvability test: a palace is searchable iff it is a tree with
/// no embedded forbidden spider. Unsolvable verdicts carry a witness.
SolvabilityVerdict is_solvable(const Palace& g);

/// Leaves whose unique neighbor has degree >= 3 in the current graph.
std::vector<Vertex> removable_leaves(const Palace& g);

struct ReductionReport {
  /// (leaf, neighbor) label pairs in removal order.
  std::vector<std::pair<std::string, std::string>> removed;
  Palace result;
  int m;  // vertex count of result
};

/// Repeatedly deletes the lowest-ordered removable leaf until none remain.
/// The result is unique up to isomorphism regardless of removal order.
ReductionReport reduce(const Palace& g);

/// Same reduction with an injectable choice among the current removable
/// leaves (pick receives the candidate count, returns an index). Exists so
/// order-independence is testable.
ReductionReport reduce_with_choice(const Palace& g,
                                   const std::function<size_t(size_t)>& pick);

}  // namespace palace
