#include "palace/characterize.hpp"

#include <algorithm>
#include <deque>

namespace palace {

std::vector<Vertex> SpiderWitness::all_vertices() const {
  std::vector<Vertex> out{center};
  for (const auto& branch : branches) {
    out.insert(out.end(), branch.begin(), branch.end());
  }
  return out;
}

namespace {

// Per-center BFS: distance, parent, and the deepest level reachable inside
// each vertex's own subtree (away from the center).
struct CenterView {
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<int> reach;
  std::vector<Vertex> order;
};

CenterView scan_from(const Palace& g, Vertex center) {
  CenterView cv;
  int n = g.size();
  cv.dist.assign(n, -1);
  cv.parent.assign(n, -1);
  cv.reach.assign(n, 0);
  cv.order.reserve(n);
  cv.order.push_back(center);
  cv.dist[center] = 0;
  for (size_t i = 0; i < cv.order.size(); ++i) {
    Vertex v = cv.order[i];
    for (Vertex u : g.neighbors(v)) {
      if (cv.dist[u] < 0) {
        cv.dist[u] = cv.dist[v] + 1;
        cv.parent[u] = v;
        cv.order.push_back(u);
      }
    }
  }
  for (size_t i = cv.order.size(); i-- > 0;) {
    Vertex v = cv.order[i];
    cv.reach[v] = std::max(cv.reach[v], cv.dist[v]);
    if (cv.parent[v] >= 0) {
      cv.reach[cv.parent[v]] = std::max(cv.reach[cv.parent[v]], cv.reach[v]);
    }
  }
  return cv;
}

}  // namespace

std::optional<SpiderWitness> contains_forbidden_spider(const Palace& g) {
  if (!g.is_tree()) fail(ErrorKind::NotATree, "palace contains a cycle");
  for (Vertex center = 0; center < g.size(); ++center) {
    if (g.degree(center) < 3) continue;
    CenterView cv = scan_from(g, center);
    std::vector<Vertex> deep;
    for (Vertex a : g.neighbors(center)) {
      if (cv.reach[a] >= 3) deep.push_back(a);
    }
    if (deep.size() < 3) continue;
    SpiderWitness w;
    w.center = center;
    for (int i = 0; i < 3; ++i) {
      Vertex a = deep[i];
      Vertex b = -1;
      for (Vertex u : g.neighbors(a)) {
        if (cv.parent[u] == a && cv.reach[u] >= 3) { b = u; break; }
      }
      Vertex c = -1;
      for (Vertex u : g.neighbors(b)) {
        if (cv.parent[u] == b) { c = u; break; }
      }
      w.branches[i] = {a, b, c};
    }
    return w;
  }
  return std::nullopt;
}

namespace {

// First cycle found by ascending-order DFS; in an undirected graph every
// back edge closes a cycle with the current stack path.
std::vector<Vertex> find_cycle(const Palace& g) {
  int n = g.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Vertex> parent(n, -1);
  struct Frame { Vertex v; size_t next; };
  std::vector<Frame> stack{{0, 0}};
  state[0] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nbrs = g.neighbors(v);
    if (next >= nbrs.size()) {
      state[v] = 2;
      stack.pop_back();
      continue;
    }
    Vertex u = nbrs[next++];
    if (u == parent[v]) continue;
    if (state[u] == 0) {
      parent[u] = v;
      state[u] = 1;
      stack.push_back({u, 0});
    } else if (state[u] == 1) {
      std::vector<Vertex> cycle;
      for (Vertex t = v; t != u; t = parent[t]) cycle.push_back(t);
      cycle.push_back(u);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
  }
  fail(ErrorKind::Internal, "cycle expected but not found");
}

}  // namespace

SolvabilityVerdict is_solvable(const Palace& g) {
  SolvabilityVerdict verdict;
  if (!g.is_tree()) {
    verdict.kind = SolvabilityVerdict::Kind::HasCycle;
    verdict.cycle = find_cycle(g);
    return verdict;
  }
  if (auto w = contains_forbidden_spider(g)) {
    verdict.kind = SolvabilityVerdict::Kind::ContainsT;
    verdict.spider = *w;
    return verdict;
  }
  verdict.kind = SolvabilityVerdict::Kind::Solvable;
  return verdict;
}

std::vector<Vertex> removable_leaves(const Palace& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) >= 3) {
      out.push_back(v);
    }
  }
  return out;
}

ReductionReport reduce_with_choice(const Palace& g,
                                   const std::function<size_t(size_t)>& pick) {
  Palace current = g;
  ReductionReport report{{}, current, current.size()};
  for (;;) {
    std::vector<Vertex> candidates = removable_leaves(current);
    if (candidates.empty()) break;
    size_t i = pick(candidates.size());
    if (i >= candidates.size()) {
      fail(ErrorKind::Precondition, "removal choice out of range");
    }
    Vertex leaf = candidates[i];
    report.removed.emplace_back(current.label(leaf),
                                current.label(current.neighbors(leaf)[0]));
    current = current.without_vertex(leaf);
  }
  report.result = std::move(current);
  report.m = report.result.size();
  return report;
}

ReductionReport reduce(const Palace& g) {
  return reduce_with_choice(g, [](size_t) { return size_t{0}; });
}

}  // namespace palace
