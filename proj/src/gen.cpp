#include "palace/gen.hpp"

#include <algorithm>
#include <string>

namespace palace {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Precondition, "empty sampling range");
  std::uint64_t zone = std::uint64_t(-1) - std::uint64_t(-1) % n;
  for (;;) {
    std::uint64_t v = next();
    if (v < zone) return v % n;
  }
}

Palace decode_prufer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) {
      fail(ErrorKind::Precondition, "sequence value out of range");
    }
    ++degree[v];
  }
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(labels[leaf], labels[v]);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(labels[leaf], labels[n - 1]);
  return Palace::from_labeled_edges(std::move(labels), edges);
}

Palace random_tree(int n, Rng& rng) {
  if (n < 1) fail(ErrorKind::Precondition, "need at least one vertex");
  if (n == 1) return Palace::from_labeled_edges({"0"}, {});
  if (n == 2) return Palace::from_labeled_edges({"0", "1"}, {{"0", "1"}});
  std::vector<int> seq(n - 2);
  for (int& v : seq) v = static_cast<int>(rng.below(n));
  return decode_prufer(seq);
}

Palace random_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

Palace random_connected_graph(int n, int extra, Rng& rng) {
  Palace tree = random_tree(n, rng);
  std::vector<std::pair<Vertex, Vertex>> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) missing.emplace_back(u, v);
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : tree.edges()) {
    edges.emplace_back(tree.label(u), tree.label(v));
  }
  int take = std::min<int>(extra, static_cast<int>(missing.size()));
  for (int i = 0; i < take; ++i) {
    size_t j = i + rng.below(missing.size() - i);
    std::swap(missing[i], missing[j]);
    edges.emplace_back(tree.label(missing[i].first),
                       tree.label(missing[i].second));
  }
  return Palace::from_labeled_edges(tree.labels(), edges);
}

}  // namespace palace
