#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "palace/error.hpp"

namespace palace {

using Vertex = int;

/// A palace: a finite connected simple undirected graph with unique string
/// labels. Vertex indices follow the order in which labels first appear in
/// the input, so all tie-breaking rules downstream are reproducible.
class Palace {
 public:
  /// Builds a palace with an explicit vertex order. Vertices referenced by
  /// `edges` must all be listed in `labels`.
  static Palace from_labeled_edges(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  /// Builds a palace whose vertex order is the first-appearance order of the
  /// labels in `edges`.
  static Palace from_edges(
      const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return edge_count_; }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws UnknownVertex.
  Vertex require(std::string_view label) const;

  /// Neighbor indices in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Connected by construction, so a tree iff |E| = |V| - 1.
  bool is_tree() const { return edge_count_ == size() - 1; }

  std::vector<Vertex> leaves() const;

  /// Edges as index pairs, sorted lexicographically by label pair (the
  /// canonical order used by every serializer).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Copy with one vertex dropped; remaining vertices keep their relative
  /// order. Fails with Disconnected if the rest falls apart.
  Palace without_vertex(Vertex v) const;

 private:
  Palace() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// tokens, '#' lines and blank lines ignored, a lone token declaring a
/// vertex. Diagnostics name the offending line.
Palace parse_palace(const std::string& text);

/// Inverse of parse_palace up to edge-set equality; edges in canonical order.
std::string to_edge_list(const Palace& g);

/// DOT description with labels quoted verbatim and edges in canonical order.
std::string to_dot(const Palace& g);

/// Two-coloring; color[v] is 0 (white) or 1 (black).
struct Bipartition {
  std::vector<uint8_t> color;

  bool white(Vertex v) const { return color[v] == 0; }
};

/// The unique two-coloring with `anchor` white, or nullopt if the graph has
/// an odd cycle.
std::optional<Bipartition> bipartition(const Palace& g, Vertex anchor);

/// Anchored at vertex 0.
std::optional<Bipartition> bipartition(const Palace& g);

struct PathDecomposition {
  std::vector<Vertex> path;  // p_0 .. p_len

  int length() const { return static_cast<int>(path.size()) - 1; }
};

/// Diameter path of a tree by double BFS. Deterministic: the first sweep
/// starts at vertex 0, both sweeps break distance ties toward the earliest
/// vertex, and the result is oriented so path.front() precedes path.back()
/// in vertex order.
PathDecomposition longest_path(const Palace& g);

/// AHU-style canonical encoding rooted at the centroid; equal strings iff
/// the trees are isomorphic.
std::string canonical_form(const Palace& g);

// Stock palaces used throughout the tests and tools.
Palace make_path(int n);
Palace make_cycle(int n);
/// Star-like tree: center "x" plus one path per entry of `legs`; leg i's
/// vertices are labelled a<i>, b<i>, c<i>, ... outward.
Palace make_spider(const std::vector<int>& legs);
/// The ten-vertex spider with three legs of three vertices each.
Palace forbidden_spider();

}  // namespace palace
