#include "palace/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace palace {

namespace {

std::vector<Mask> neighbor_masks(const Palace& g) {
  if (g.size() > kEngineVertexCap) {
    fail(ErrorKind::VertexCapExceeded,
         "possibility-set engine supports at most " +
             std::to_string(kEngineVertexCap) + " vertices (got " +
             std::to_string(g.size()) + ")");
  }
  std::vector<Mask> nbr(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbors(v)) nbr[v] |= Mask{1} << u;
  }
  return nbr;
}

Mask step_masks(Mask candidates, Vertex probe, const std::vector<Mask>& nbr) {
  Mask survivors = candidates & ~(Mask{1} << probe);
  Mask out = 0;
  while (survivors) {
    int v = std::countr_zero(survivors);
    survivors &= survivors - 1;
    out |= nbr[v];
  }
  return out;
}

void check_probes(const Palace& g, const ProbeSequence& p) {
  if (p.probes.empty()) {
    fail(ErrorKind::Precondition, "probe sequence must cover at least one day");
  }
  for (Vertex v : p.probes) {
    if (v < 0 || v >= g.size()) {
      fail(ErrorKind::UnknownVertex,
           "probe index " + std::to_string(v) + " out of range");
    }
  }
}

}  // namespace

Mask full_mask(const Palace& g) {
  if (g.size() > kEngineVertexCap) {
    fail(ErrorKind::VertexCapExceeded,
         "possibility-set engine supports at most " +
             std::to_string(kEngineVertexCap) + " vertices");
  }
  return g.size() == kEngineVertexCap ? ~Mask{0}
                                      : (Mask{1} << g.size()) - 1;
}

Mask step(const Palace& g, Mask candidates, Vertex probe) {
  if (probe < 0 || probe >= g.size()) {
    fail(ErrorKind::UnknownVertex, "probe index out of range");
  }
  return step_masks(candidates, probe, neighbor_masks(g));
}

VerificationResult verify_strategy(const Palace& g, const ProbeSequence& p) {
  check_probes(g, p);
  std::vector<Mask> nbr = neighbor_masks(g);
  VerificationResult result;
  Mask candidates = full_mask(g);
  for (int day = 1; day <= p.days(); ++day) {
    result.trace.push_back(candidates);
    Vertex probe = p.probes[day - 1];
    Mask survivors = candidates & ~(Mask{1} << probe);
    if (survivors == 0) {
      result.caught = true;
      result.capture_day = day;
      return result;
    }
    candidates = step_masks(candidates, probe, nbr);
  }
  result.caught = false;
  result.walk = extract_escape_walk(g, p, result.trace);
  return result;
}

EscapeWalk extract_escape_walk(const Palace& g, const ProbeSequence& p,
                               const std::vector<Mask>& trace) {
  check_probes(g, p);
  if (trace.size() != static_cast<size_t>(p.days())) {
    fail(ErrorKind::NoEscape,
         "trace ends before day " + std::to_string(p.days()) +
             "; every behavior was caught");
  }
  int n = p.days();
  std::vector<Mask> survivors(n);
  for (int d = 0; d < n; ++d) {
    survivors[d] = trace[d] & ~(Mask{1} << p.probes[d]);
    if (survivors[d] == 0) {
      fail(ErrorKind::NoEscape, "no surviving room on day " +
                                    std::to_string(d + 1));
    }
  }
  EscapeWalk walk;
  walk.rooms.assign(n, -1);
  walk.rooms[n - 1] = std::countr_zero(survivors[n - 1]);
  for (int d = n - 2; d >= 0; --d) {
    Mask options = survivors[d];
    while (options) {
      Vertex v = std::countr_zero(options);
      options &= options - 1;
      if (g.adjacent(v, walk.rooms[d + 1])) {
        walk.rooms[d] = v;
        break;
      }
    }
    if (walk.rooms[d] < 0) {
      fail(ErrorKind::Internal, "escape walk reconstruction lost adjacency");
    }
  }
  return walk;
}

SolveResult min_days_exact(const Palace& g, const SolveOptions& opts) {
  int n = g.size();
  if (n > kSolverVertexCap) {
    fail(ErrorKind::VertexCapExceeded,
         "exact solver supports at most " + std::to_string(kSolverVertexCap) +
             " vertices (got " + std::to_string(n) + ")");
  }
  std::vector<Mask> nbr = neighbor_masks(g);
  Mask start = full_mask(g);
  size_t space = size_t{1} << n;
  std::vector<uint32_t> parent(space, 0);
  std::vector<int8_t> probe_from(space, -1);
  std::vector<char> seen(space, 0);

  auto reconstruct = [&](Mask last_state, Vertex last_probe, int days) {
    SolveResult result;
    result.solvable = true;
    result.days = days;
    std::vector<Vertex> probes{last_probe};
    for (Mask s = last_state; s != start; s = parent[s]) {
      probes.push_back(probe_from[s]);
    }
    std::reverse(probes.begin(), probes.end());
    result.witness.probes = std::move(probes);
    return result;
  };

  if (n == 1) {
    SolveResult result;
    result.solvable = true;
    result.days = 1;
    result.witness.probes = {0};
    return result;
  }

  std::vector<uint32_t> frontier{static_cast<uint32_t>(start)};
  seen[start] = 1;
  int depth = 0;
  while (!frontier.empty()) {
    if (opts.max_days && depth >= *opts.max_days) {
      fail(ErrorKind::DayCapExceeded,
           "exact solver hit the --max-days cap of " +
               std::to_string(*opts.max_days) + " before resolving");
    }
    std::vector<uint32_t> next_frontier;
    for (uint32_t s : frontier) {
      for (Vertex x = 0; x < n; ++x) {
        Mask survivors = s & ~(Mask{1} << x);
        if (survivors == 0) {
          return reconstruct(s, x, depth + 1);
        }
        Mask child = step_masks(s, x, nbr);
        if (seen[child]) continue;
        if (opts.dominance_pruning) {
          // A set dominated by an already-expanded subset can be dropped:
          // anything that clears the superset clears the subset too, and the
          // subset's discovery prefix is lexicographically no larger. Checked
          // against the parent and all single-vertex-removed subsets.
          if ((child & s) == s && child != s) continue;
          bool dominated = false;
          Mask rest = child;
          while (rest) {
            Vertex v = std::countr_zero(rest);
            rest &= rest - 1;
            if (seen[child & ~(Mask{1} << v)]) {
              dominated = true;
              break;
            }
          }
          if (dominated) continue;
        }
        seen[child] = 1;
        parent[child] = s;
        probe_from[child] = static_cast<int8_t>(x);
        next_frontier.push_back(static_cast<uint32_t>(child));
      }
    }
    frontier = std::move(next_frontier);
    ++depth;
  }
  return SolveResult{};  // frontier exhausted: unsolvable
}

std::uint64_t enumeration_state_limit() {
  if (const char* env = std::getenv("PALACE_STATE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    fail(ErrorKind::Precondition,
         std::string("PALACE_STATE_LIMIT is not a positive integer: '") +
             env + "'");
  }
  return 1ull << 22;
}

namespace {

constexpr uint8_t kUnreachable = 0xff;

// Exact days-to-clear for every candidate set, by backward value iteration
// from the empty set. kUnreachable marks sets the searcher can never clear.
std::vector<uint8_t> clearing_distances(int n, const std::vector<Mask>& nbr,
                                        std::uint64_t limit,
                                        std::uint64_t& budget_used) {
  size_t space = size_t{1} << n;
  std::uint64_t cells = static_cast<std::uint64_t>(space) * n;
  budget_used += cells;
  if (budget_used > limit) {
    fail(ErrorKind::BudgetExceeded,
         "state budget exceeded while tabulating clearing distances (" +
             std::to_string(budget_used) + " > " + std::to_string(limit) +
             "); raise PALACE_STATE_LIMIT to allow more");
  }
  std::vector<uint8_t> dist(space, kUnreachable);
  dist[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t s = 1; s < space; ++s) {
      uint8_t best = kUnreachable;
      for (Vertex x = 0; x < n; ++x) {
        Mask survivors = s & ~(Mask{1} << x);
        uint8_t d;
        if (survivors == 0) {
          d = 1;
        } else {
          uint8_t sub = dist[step_masks(s, x, nbr)];
          d = sub == kUnreachable
                  ? kUnreachable
                  : static_cast<uint8_t>(std::min<int>(sub + 1, kUnreachable));
        }
        best = std::min(best, d);
      }
      if (best < dist[s]) {
        dist[s] = best;
        changed = true;
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<ProbeSequence> enumerate_optimal(
    const Palace& g, int days, std::optional<std::uint64_t> state_limit) {
  int n = g.size();
  if (n > kSolverVertexCap) {
    fail(ErrorKind::VertexCapExceeded,
         "enumeration supports at most " + std::to_string(kSolverVertexCap) +
             " vertices (got " + std::to_string(n) + ")");
  }
  std::uint64_t limit = state_limit ? *state_limit : enumeration_state_limit();
  std::uint64_t budget_used = 0;
  std::vector<Mask> nbr = neighbor_masks(g);
  std::vector<uint8_t> dist = clearing_distances(n, nbr, limit, budget_used);
  Mask start = full_mask(g);
  if (dist[start] == kUnreachable) {
    fail(ErrorKind::Unsolvable, "palace has no winning probe sequence");
  }
  if (dist[start] != days) {
    fail(ErrorKind::Precondition,
         "enumeration requires the exact optimum (" +
             std::to_string(int(dist[start])) + "), got " +
             std::to_string(days));
  }

  std::vector<ProbeSequence> found;
  std::vector<Vertex> prefix;
  prefix.reserve(days);

  // Slack is always zero: every expanded prefix must clear the remaining set
  // in exactly the remaining days, so the search visits winners only.
  auto dfs = [&](auto&& self, Mask s, int day) -> void {
    if (++budget_used > limit) {
      fail(ErrorKind::BudgetExceeded,
           "state budget exceeded after " + std::to_string(budget_used - 1) +
               " expansions; raise PALACE_STATE_LIMIT to allow more");
    }
    for (Vertex x = 0; x < n; ++x) {
      Mask survivors = s & ~(Mask{1} << x);
      if (survivors == 0) {
        if (day == days) {
          prefix.push_back(x);
          found.push_back(ProbeSequence{prefix});
          prefix.pop_back();
        }
        continue;
      }
      if (day == days) continue;
      Mask child = step_masks(s, x, nbr);
      if (dist[child] != days - day) continue;
      prefix.push_back(x);
      self(self, child, day + 1);
      prefix.pop_back();
    }
  };
  dfs(dfs, start, 1);
  return found;
}

}  // namespace palace
