#include "palace/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace palace {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::VertexCapExceeded: return "VertexCapExceeded";
    case ErrorKind::DayCapExceeded: return "DayCapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoEscape: return "NoEscape";
    case ErrorKind::RulesViolated: return "RulesViolated";
    case ErrorKind::Internal: return "Internal";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

// Incremental builder shared by the parser and the programmatic factories.
struct Builder {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::vector<Vertex>> adj;

  Vertex vertex(const std::string& label) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    Vertex v = static_cast<Vertex>(labels.size());
    labels.push_back(label);
    index.emplace(label, v);
    adj.emplace_back();
    return v;
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nu = adj[u];
    return std::find(nu.begin(), nu.end(), v) != nu.end();
  }

  void add_edge(Vertex u, Vertex v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
};

void check_connected(const std::vector<std::string>& labels,
                     const std::vector<std::vector<Vertex>>& adj) {
  if (labels.empty()) return;
  std::vector<char> seen(labels.size(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  for (size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      fail(ErrorKind::Disconnected,
           "palace is disconnected: no path between '" + labels[0] +
               "' and '" + labels[v] + "'");
    }
  }
}

std::string quote_dot(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Palace Palace::from_labeled_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  Builder b;
  for (const auto& label : labels) {
    if (b.index.count(label)) {
      fail(ErrorKind::Precondition, "duplicate vertex label '" + label + "'");
    }
    b.vertex(label);
  }
  Palace g;
  g.labels_ = std::move(b.labels);
  g.index_ = std::move(b.index);
  g.adj_ = std::move(b.adj);
  for (const auto& [a, bb] : edges) {
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(bb);
    if (ia == g.index_.end() || ib == g.index_.end()) {
      fail(ErrorKind::UnknownVertex,
           "edge references unknown vertex '" +
               (ia == g.index_.end() ? a : bb) + "'");
    }
    Vertex u = ia->second, v = ib->second;
    if (u == v) fail(ErrorKind::SelfLoop, "self-loop at '" + a + "'");
    const auto& nu = g.adj_[u];
    if (std::find(nu.begin(), nu.end(), v) != nu.end()) {
      fail(ErrorKind::DuplicateEdge, "duplicate edge '" + a + " " + bb + "'");
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  if (g.labels_.empty()) fail(ErrorKind::EmptyInput, "empty palace");
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  check_connected(g.labels_, g.adj_);
  return g;
}

Palace Palace::from_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> seen;
  for (const auto& [a, b] : edges) {
    if (!seen.count(a)) { seen.emplace(a, 0); labels.push_back(a); }
    if (!seen.count(b)) { seen.emplace(b, 0); labels.push_back(b); }
  }
  return from_labeled_edges(std::move(labels), edges);
}

std::optional<Vertex> Palace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Palace::require(std::string_view label) const {
  auto v = find(label);
  if (!v) {
    fail(ErrorKind::UnknownVertex,
         "unknown vertex '" + std::string(label) + "'");
  }
  return *v;
}

bool Palace::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Vertex> Palace::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Palace::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end(),
            [this](const auto& e, const auto& f) {
              const std::string& ea = std::min(labels_[e.first], labels_[e.second]);
              const std::string& eb = std::max(labels_[e.first], labels_[e.second]);
              const std::string& fa = std::min(labels_[f.first], labels_[f.second]);
              const std::string& fb = std::max(labels_[f.first], labels_[f.second]);
              return std::tie(ea, eb) < std::tie(fa, fb);
            });
  return out;
}

Palace Palace::without_vertex(Vertex drop) const {
  std::vector<std::string> labels;
  labels.reserve(labels_.size() - 1);
  for (Vertex v = 0; v < size(); ++v) {
    if (v != drop) labels.push_back(labels_[v]);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (Vertex u = 0; u < size(); ++u) {
    if (u == drop) continue;
    for (Vertex v : adj_[u]) {
      if (v != drop && u < v) edges.emplace_back(labels_[u], labels_[v]);
    }
  }
  return from_labeled_edges(std::move(labels), edges);
}

Palace parse_palace(const std::string& text) {
  Builder b;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() == 1) {
      b.vertex(tokens[0]);
    } else if (tokens.size() == 2) {
      if (tokens[0] == tokens[1]) {
        fail(ErrorKind::SelfLoop, where + "self-loop at '" + tokens[0] + "'");
      }
      Vertex u = b.vertex(tokens[0]);
      Vertex v = b.vertex(tokens[1]);
      if (b.has_edge(u, v)) {
        fail(ErrorKind::DuplicateEdge,
             where + "duplicate edge '" + tokens[0] + " " + tokens[1] + "'");
      }
      b.add_edge(u, v);
      edges.emplace_back(u, v);
    } else {
      fail(ErrorKind::MalformedLine,
           where + "expected one or two tokens, got " +
               std::to_string(tokens.size()));
    }
  }
  if (b.labels.empty()) {
    fail(ErrorKind::EmptyInput, "no vertices in input");
  }
  std::vector<std::pair<std::string, std::string>> label_edges;
  label_edges.reserve(edges.size());
  for (auto [u, v] : edges) {
    label_edges.emplace_back(b.labels[u], b.labels[v]);
  }
  return Palace::from_labeled_edges(b.labels, label_edges);
}

std::string to_edge_list(const Palace& g) {
  std::string out;
  if (g.size() == 1) {
    out = g.label(0) + "\n";
    return out;
  }
  for (auto [u, v] : g.edges()) {
    const std::string& a = g.label(u);
    const std::string& b = g.label(v);
    if (a <= b) {
      out += a + " " + b + "\n";
    } else {
      out += b + " " + a + "\n";
    }
  }
  return out;
}

std::string to_dot(const Palace& g) {
  std::string out = "graph palace {\n";
  std::vector<std::string> sorted = g.labels();
  std::sort(sorted.begin(), sorted.end());
  for (const auto& label : sorted) {
    out += "  " + quote_dot(label) + ";\n";
  }
  for (auto [u, v] : g.edges()) {
    const std::string& a = g.label(u);
    const std::string& b = g.label(v);
    out += "  " + quote_dot(std::min(a, b)) + " -- " + quote_dot(std::max(a, b)) + ";\n";
  }
  out += "}\n";
  return out;
}

std::optional<Bipartition> bipartition(const Palace& g, Vertex anchor) {
  Bipartition bp;
  bp.color.assign(g.size(), 2);
  std::deque<Vertex> queue{anchor};
  bp.color[anchor] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (bp.color[u] == 2) {
        bp.color[u] = static_cast<uint8_t>(1 - bp.color[v]);
        queue.push_back(u);
      } else if (bp.color[u] == bp.color[v]) {
        return std::nullopt;
      }
    }
  }
  return bp;
}

std::optional<Bipartition> bipartition(const Palace& g) {
  return bipartition(g, 0);
}

namespace {

// BFS distances plus parents, neighbors visited in ascending order.
void bfs(const Palace& g, Vertex start, std::vector<int>& dist,
         std::vector<Vertex>& parent) {
  dist.assign(g.size(), -1);
  parent.assign(g.size(), -1);
  std::deque<Vertex> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
}

Vertex earliest_farthest(const std::vector<int>& dist) {
  int best = -1;
  Vertex who = 0;
  for (size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] > best) {
      best = dist[v];
      who = static_cast<Vertex>(v);
    }
  }
  return who;
}

}  // namespace

PathDecomposition longest_path(const Palace& g) {
  if (!g.is_tree()) fail(ErrorKind::NotATree, "palace contains a cycle");
  std::vector<int> dist;
  std::vector<Vertex> parent;
  bfs(g, 0, dist, parent);
  Vertex u = earliest_farthest(dist);
  bfs(g, u, dist, parent);
  Vertex w = earliest_farthest(dist);
  std::vector<Vertex> path;
  for (Vertex v = w; v != -1; v = parent[v]) path.push_back(v);
  // path currently runs w -> u; orient so the lower endpoint comes first
  if (path.front() > path.back()) {
    std::reverse(path.begin(), path.end());
  }
  return PathDecomposition{std::move(path)};
}

namespace {

std::vector<Vertex> tree_centroids(const Palace& g) {
  int n = g.size();
  if (n == 1) return {0};
  std::vector<int> order, sub(n, 1);
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Vertex u : g.neighbors(v)) {
      if (u != parent[v]) {
        parent[u] = v;
        order.push_back(u);
      }
    }
  }
  for (size_t i = order.size(); i-- > 1;) {
    sub[parent[order[i]]] += sub[order[i]];
  }
  int best = n + 1;
  std::vector<Vertex> centroids;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - sub[v];
    for (Vertex u : g.neighbors(v)) {
      if (u != parent[v]) heaviest = std::max(heaviest, sub[u]);
    }
    if (heaviest < best) {
      best = heaviest;
      centroids.assign(1, v);
    } else if (heaviest == best) {
      centroids.push_back(v);
    }
  }
  return centroids;
}

std::string ahu_encode(const Palace& g, Vertex root) {
  int n = g.size();
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Vertex u : g.neighbors(v)) {
      if (parent[u] == -1) {
        parent[u] = v;
        order.push_back(u);
      }
    }
  }
  std::vector<std::string> enc(n);
  for (size_t i = order.size(); i-- > 0;) {
    Vertex v = order[i];
    std::vector<std::string> kids;
    for (Vertex u : g.neighbors(v)) {
      if (parent[u] == v && u != v) kids.push_back(enc[u]);
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    enc[v] = std::move(s);
  }
  return enc[root];
}

}  // namespace

std::string canonical_form(const Palace& g) {
  if (!g.is_tree()) fail(ErrorKind::NotATree, "palace contains a cycle");
  std::string best;
  for (Vertex c : tree_centroids(g)) {
    std::string enc = ahu_encode(g, c);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

Palace make_path(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back(labels[i], labels[i + 1]);
  }
  return Palace::from_labeled_edges(std::move(labels), edges);
}

Palace make_cycle(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(labels[i], labels[(i + 1) % n]);
  }
  return Palace::from_labeled_edges(std::move(labels), edges);
}

Palace make_spider(const std::vector<int>& legs) {
  std::vector<std::string> labels{"x"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < legs.size(); ++i) {
    std::string prev = "x";
    for (int d = 0; d < legs[i]; ++d) {
      std::string name(1, static_cast<char>('a' + d));
      name += std::to_string(i + 1);
      labels.push_back(name);
      edges.emplace_back(prev, name);
      prev = name;
    }
  }
  return Palace::from_labeled_edges(std::move(labels), edges);
}

Palace forbidden_spider() { return make_spider({3, 3, 3}); }

}  // namespace palace
