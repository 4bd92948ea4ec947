#include "palace/strategy.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "palace/characterize.hpp"
#include "palace/engine.hpp"

namespace palace {

namespace {

void require_solvable(const Palace& g) {
  SolvabilityVerdict verdict = is_solvable(g);
  if (verdict.solvable()) return;
  if (verdict.kind == SolvabilityVerdict::Kind::HasCycle) {
    fail(ErrorKind::Unsolvable,
         "palace is unsolvable: it contains a cycle through '" +
             g.label(verdict.cycle[0]) + "'");
  }
  fail(ErrorKind::Unsolvable,
       "palace is unsolvable: it contains the forbidden spider centered at '" +
           g.label(verdict.spider->center) + "'");
}

}  // namespace

ProbeSequence linear_search(const Palace& g, const PathDecomposition& p) {
  require_solvable(g);
  if (g.size() < 3) {
    fail(ErrorKind::Precondition,
         "linear search needs at least three vertices");
  }
  const auto& path = p.path;
  if (path.size() < 3) {
    fail(ErrorKind::Precondition, "maximal path too short for a search");
  }
  std::vector<char> on_path(g.size(), 0);
  for (size_t i = 0; i < path.size(); ++i) {
    if (on_path[path[i]] ||
        (i > 0 && !g.adjacent(path[i - 1], path[i]))) {
      fail(ErrorKind::Precondition, "not a simple path in this palace");
    }
    on_path[path[i]] = 1;
  }
  // Every non-leaf vertex must lie on the path or next to it; anything else
  // would contradict solvability, so refuse loudly instead of probing on.
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) <= 1 || on_path[v]) continue;
    bool anchored = false;
    for (Vertex u : g.neighbors(v)) anchored = anchored || on_path[u];
    if (!anchored) {
      fail(ErrorKind::Internal,
           "non-leaf vertex '" + g.label(v) +
               "' is not adjacent to the maximal path in a solvable palace");
    }
  }
  ProbeSequence seq;
  for (size_t j = 1; j + 1 < path.size(); ++j) {
    Vertex pj = path[j];
    seq.probes.push_back(pj);
    for (Vertex u : g.neighbors(pj)) {
      if (!on_path[u] && g.degree(u) > 1) {
        seq.probes.push_back(u);
        seq.probes.push_back(pj);
      }
    }
  }
  return seq;
}

ProbeSequence linear_search(const Palace& g) {
  return linear_search(g, longest_path(g));
}

ProbeSequence linear_strategy(const Palace& g) {
  ProbeSequence forward = linear_search(g);
  ProbeSequence seq = forward;
  seq.probes.insert(seq.probes.end(), forward.probes.rbegin(),
                    forward.probes.rend());
  if (g.size() <= kEngineVertexCap) {
    VerificationResult check = verify_strategy(g, seq);
    if (!check.caught) {
      fail(ErrorKind::Internal, "synthesized strategy failed verification");
    }
  }
  return seq;
}

int optimal_length(const Palace& g) {
  if (g.size() == 1) return 1;
  if (g.size() == 2) return 2;
  require_solvable(g);
  return 2 * reduce(g).m - 4;
}

VertexPartition vertex_partition(const Palace& g) {
  require_solvable(g);
  if (!removable_leaves(g).empty()) {
    fail(ErrorKind::Precondition, "palace is not reduced");
  }
  int m = g.size();
  if (m <= 4) {
    fail(ErrorKind::Precondition,
         "partition requires more than four vertices");
  }
  VertexPartition part;
  std::vector<char> in_a(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 1) {
      part.leaves.push_back(v);
      in_a[g.neighbors(v)[0]] = 1;
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (in_a[v]) {
      part.leaf_neighbors.push_back(v);
    } else if (g.degree(v) > 1) {
      part.interior.push_back(v);
    }
  }
  // Structural facts for reduced solvable palaces with m > 4.
  bool ok = part.leaf_neighbors.size() == part.leaves.size();
  for (Vertex a : part.leaf_neighbors) {
    ok = ok && g.degree(a) == 2;
    for (Vertex b : part.leaf_neighbors) ok = ok && !g.adjacent(a, b);
  }
  int q_degree_sum = 0;
  for (Vertex v : part.interior) q_degree_sum += g.degree(v);
  ok = ok && q_degree_sum ==
                 2 * (m - 1) - 3 * static_cast<int>(part.leaf_neighbors.size());
  if (!ok) {
    fail(ErrorKind::Internal, "vertex partition invariants failed");
  }
  return part;
}

int lower_bound(const Palace& g) {
  VertexPartition part = vertex_partition(g);
  int total = 2 * static_cast<int>(part.leaf_neighbors.size());
  for (Vertex v : part.interior) total += 2 * g.degree(v) - 2;
  return total;
}

bool changes_parity(const Palace& g, const ProbeSequence& p) {
  auto coloring = bipartition(g);
  if (!coloring) {
    fail(ErrorKind::Precondition,
         "parity is defined only for bipartite palaces");
  }
  bool seen[2] = {false, false};
  for (int day = 1; day <= p.days(); ++day) {
    seen[(day + coloring->color[p.probes[day - 1]]) & 1] = true;
  }
  return seen[0] && seen[1];
}

std::vector<PathDecomposition> all_maximal_paths(const Palace& g) {
  int diameter = longest_path(g).length();
  std::vector<PathDecomposition> out;
  for (Vertex u = 0; u < g.size(); ++u) {
    std::vector<int> dist(g.size(), -1);
    std::vector<Vertex> parent(g.size(), -1);
    std::vector<Vertex> order{u};
    dist[u] = 0;
    for (size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : g.neighbors(order[i])) {
        if (dist[w] < 0) {
          dist[w] = dist[order[i]] + 1;
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      if (dist[v] != diameter) continue;
      std::vector<Vertex> path;
      for (Vertex t = v; t != -1; t = parent[t]) path.push_back(t);
      std::reverse(path.begin(), path.end());  // runs u .. v
      out.push_back(PathDecomposition{std::move(path)});
    }
  }
  return out;
}

namespace {

// Replays a probe walk against one oriented maximal path, checking the four
// search constraints plus the endpoints and non-leaf coverage.
bool is_linear_search_on(const Palace& g, const std::vector<Vertex>& probes,
                         const PathDecomposition& p) {
  const auto& path = p.path;
  size_t len = path.size();
  if (len < 3 || probes.empty()) return false;
  std::vector<int> path_index(g.size(), -1);
  for (size_t i = 0; i < len; ++i) path_index[path[i]] = int(i);
  if (probes.front() != path[1] || probes.back() != path[len - 2]) {
    return false;
  }
  std::vector<char> probed(g.size(), 0);
  std::vector<char> off_path_visited(g.size(), 0);
  probed[probes[0]] = 1;
  int pos = 1;
  for (size_t i = 1; i < probes.size(); ++i) {
    Vertex v = probes[i];
    if (!g.adjacent(probes[i - 1], v)) return false;
    int idx = path_index[v];
    if (idx >= 0) {
      if (idx < pos) return false;   // no moving back down the path
      pos = idx;
    } else {
      if (path_index[probes[i - 1]] < 0) return false;  // two days off-path
      if (off_path_visited[v]) return false;            // off-path revisit
      off_path_visited[v] = 1;
    }
    probed[v] = 1;
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 1 && !probed[v]) return false;
  }
  return true;
}

}  // namespace

bool is_linear_strategy(const Palace& g, const ProbeSequence& p) {
  if (!g.is_tree() || g.size() < 3) return false;
  int n = p.days();
  if (n < 2 || n % 2) return false;
  int half = n / 2;
  std::vector<Vertex> first(p.probes.begin(), p.probes.begin() + half);
  std::vector<Vertex> second(p.probes.begin() + half, p.probes.end());
  auto coloring = bipartition(g);
  if (!coloring) return false;
  int parity_first = (1 + coloring->color[first[0]]) & 1;
  int parity_second = (half + 1 + coloring->color[second[0]]) & 1;
  if (parity_first == parity_second) return false;
  std::vector<PathDecomposition> paths = all_maximal_paths(g);
  auto is_search = [&](const std::vector<Vertex>& probes) {
    for (const auto& path : paths) {
      if (is_linear_search_on(g, probes, path)) return true;
    }
    return false;
  };
  return is_search(first) && is_search(second);
}

}  // namespace palace
