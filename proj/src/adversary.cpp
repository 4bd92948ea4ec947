#include "palace/adversary.hpp"

#include <algorithm>
#include <string>

namespace palace {

namespace {

void check_probe_range(const Palace& g, const ProbeSequence& probes) {
  if (probes.probes.empty()) {
    fail(ErrorKind::Precondition, "probe sequence must cover at least one day");
  }
  for (Vertex v : probes.probes) {
    if (v < 0 || v >= g.size()) {
      fail(ErrorKind::UnknownVertex, "probe index out of range");
    }
  }
}

}  // namespace

EscapeWalk cycle_evader(const Palace& g, const std::vector<Vertex>& cycle,
                        const ProbeSequence& probes, Parity start_parity) {
  check_probe_range(g, probes);
  size_t len = cycle.size();
  if (len < 3) {
    fail(ErrorKind::Precondition, "cycle must have at least three vertices");
  }
  std::vector<char> used(g.size(), 0);
  for (size_t i = 0; i < len; ++i) {
    Vertex v = cycle[i];
    Vertex next = cycle[(i + 1) % len];
    if (v < 0 || v >= g.size() || used[v] || !g.adjacent(v, next)) {
      fail(ErrorKind::Precondition, "not a simple cycle in this palace");
    }
    used[v] = 1;
  }

  int n = probes.days();
  int want = start_parity == Parity::Even ? 0 : 1;
  // Start at the lowest-ordered safe cycle vertex, preferring positions of
  // the requested parity.
  int pos = -1;
  for (int pass = 0; pass < 2 && pos < 0; ++pass) {
    for (size_t i = 0; i < len; ++i) {
      if (pass == 0 && static_cast<int>(i % 2) != want) continue;
      if (cycle[i] == probes.probes[0]) continue;
      if (pos < 0 || cycle[i] < cycle[pos]) pos = static_cast<int>(i);
    }
  }
  EscapeWalk walk;
  walk.rooms.push_back(cycle[pos]);
  for (int day = 1; day < n; ++day) {
    int left = static_cast<int>((pos + len - 1) % len);
    int right = static_cast<int>((pos + 1) % len);
    Vertex probe = probes.probes[day];
    int choice;
    if (cycle[left] == probe) {
      choice = right;
    } else if (cycle[right] == probe) {
      choice = left;
    } else {
      choice = cycle[left] < cycle[right] ? left : right;
    }
    pos = choice;
    walk.rooms.push_back(cycle[pos]);
  }
  return walk;
}

namespace {

// Shared helpers for the clairvoyant evaders. Branch identifiers are
// indices into the witness/instance branch arrays; -1 means "not a branch
// vertex" (the center, or a probe outside the witness).
struct SpiderMap {
  Vertex center;
  std::array<std::array<Vertex, 3>, 3> branches;
  std::vector<int> branch_of;

  SpiderMap(const Palace& g, const SpiderWitness& w)
      : center(w.center), branches(w.branches), branch_of(g.size(), -1) {
    std::vector<char> seen(g.size(), 0);
    auto claim = [&](Vertex v, int b) {
      if (v < 0 || v >= static_cast<int>(seen.size()) || seen[v]) {
        fail(ErrorKind::Precondition, "spider witness vertices not distinct");
      }
      seen[v] = 1;
      if (b >= 0) branch_of[v] = b;
    };
    claim(center, -1);
    for (int b = 0; b < 3; ++b) {
      for (Vertex v : branches[b]) claim(v, b);
      if (!g.adjacent(center, branches[b][0]) ||
          !g.adjacent(branches[b][0], branches[b][1]) ||
          !g.adjacent(branches[b][1], branches[b][2])) {
        fail(ErrorKind::Precondition, "spider witness edges missing");
      }
    }
  }
};

}  // namespace

EscapeWalk spider_evader(const Palace& g, const SpiderWitness& w,
                         const ProbeSequence& probes) {
  check_probe_range(g, probes);
  SpiderMap map(g, w);
  int n = probes.days();
  const auto& seq = probes.probes;

  // First day (0-based index d) on or after `from` such that the searcher
  // probes a_j then b_j on consecutive days; returns that branch j, or -1.
  auto next_double_visit = [&](int from) {
    for (int d = from; d + 1 < n; ++d) {
      int b = map.branch_of[seq[d]];
      if (b >= 0 && seq[d] == map.branches[b][0] &&
          seq[d + 1] == map.branches[b][1]) {
        return b;
      }
    }
    return -1;
  };

  // Rule for leaving the center on day d (0-based): avoid the branch probed
  // on day d, and the branch of the next two-day a_j, b_j visit.
  auto pick_branch = [&](int d) {
    int avoid_probe = d < n ? map.branch_of[seq[d]] : -1;
    int avoid_double = next_double_visit(d);
    for (int b = 0; b < 3; ++b) {
      if (b != avoid_probe && b != avoid_double) return b;
    }
    fail(ErrorKind::Internal, "no branch available");
  };

  EscapeWalk walk;
  Vertex at = map.branches[pick_branch(0)][0];
  for (int d = 0; d < n; ++d) {
    if (at == seq[d]) {
      fail(ErrorKind::RulesViolated,
           "evader caught on day " + std::to_string(d + 1) +
               " at '" + g.label(at) + "'; the movement rules should make "
               "this impossible");
    }
    walk.rooms.push_back(at);
    if (d + 1 == n) break;
    int b = map.branch_of[at];
    Vertex next;
    if (at == map.center) {
      next = map.branches[pick_branch(d + 1)][0];
    } else if (at == map.branches[b][2]) {
      next = map.branches[b][1];
    } else if (at == map.branches[b][1]) {
      next = seq[d + 1] == map.branches[b][0] ? map.branches[b][2]
                                              : map.branches[b][0];
    } else {
      next = seq[d + 1] == map.center ? map.branches[b][1] : map.center;
    }
    at = next;
  }
  return walk;
}

StarInstance star_instance(const Palace& g, Vertex center) {
  if (center < 0 || center >= g.size()) {
    fail(ErrorKind::UnknownVertex, "center index out of range");
  }
  StarInstance s;
  s.center = center;
  for (Vertex a : g.neighbors(center)) {
    Vertex b = -1;
    for (Vertex u : g.neighbors(a)) {
      if (u != center) { b = u; break; }
    }
    if (b < 0) {
      fail(ErrorKind::Precondition,
           "neighbor '" + g.label(a) + "' has no vertex beyond it");
    }
    s.branches.push_back({a, b});
  }
  if (s.k() < 2) {
    fail(ErrorKind::Precondition, "star needs at least two branches");
  }
  return s;
}

StarEvasion star_evader(const Palace& g, const StarInstance& s,
                        const ProbeSequence& probes, Parity white_days) {
  check_probe_range(g, probes);
  int k = s.k();
  if (k < 2) fail(ErrorKind::Precondition, "star needs at least two branches");
  std::vector<int> branch_of(g.size(), -1);
  for (int b = 0; b < k; ++b) {
    for (Vertex v : s.branches[b]) {
      if (v < 0 || v >= g.size() || branch_of[v] >= 0 || v == s.center) {
        fail(ErrorKind::Precondition, "star branches not distinct");
      }
      branch_of[v] = b;
    }
    if (!g.adjacent(s.center, s.branches[b][0]) ||
        !g.adjacent(s.branches[b][0], s.branches[b][1])) {
      fail(ErrorKind::Precondition, "star edges missing");
    }
  }

  int n = probes.days();
  const auto& seq = probes.probes;

  // Leaving the center: go toward whichever branch the searcher is due to
  // visit last (never, if possible), ties toward the lowest branch.
  auto pick_branch = [&](int from) {
    std::vector<int> next_visit(k, n + 1);
    for (int d = n - 1; d >= from; --d) {
      int b = branch_of[seq[d]];
      if (b >= 0) next_visit[b] = d;
    }
    int best = 0;
    for (int b = 1; b < k; ++b) {
      if (next_visit[b] > next_visit[best]) best = b;
    }
    return best;
  };

  EscapeWalk walk;
  StarEvasion out;
  Vertex at;
  if (white_days == Parity::Even) {
    // Day 1 is a black day; start on some a_i.
    at = s.branches[pick_branch(0)][0];
  } else {
    at = seq[0] == s.center ? s.branches[pick_branch(1)][1] : s.center;
  }
  for (int d = 0; d < n; ++d) {
    walk.rooms.push_back(at);
    if (at == seq[d]) {
      out.survived = false;
      out.caught_day = d + 1;
      out.walk = std::move(walk);
      return out;
    }
    if (d + 1 == n) break;
    int b = branch_of[at];
    Vertex next;
    if (at == s.center) {
      next = s.branches[pick_branch(d + 1)][0];
    } else if (at == s.branches[b][1]) {
      next = s.branches[b][0];
    } else {
      next = seq[d + 1] == s.center ? s.branches[b][1] : s.center;
    }
    at = next;
  }
  out.survived = true;
  out.caught_day = 0;
  out.walk = std::move(walk);
  return out;
}

}  // namespace palace
