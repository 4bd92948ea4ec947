#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "palace/graph.hpp"

namespace palace {

/// Deterministic random source: std::mt19937_64 (bit-exact across platforms)
/// plus a rejection-based bounded sampler, so corpora regenerate identically
/// from their seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// Decodes a Pruefer sequence over {0, .., n-1} (length n-2) into the tree it
/// encodes; labels are the decimal vertex numbers in natural order.
Palace decode_prufer(const std::vector<int>& seq);

/// Uniform random labeled tree on n >= 1 vertices via a random Pruefer
/// sequence.
Palace random_tree(int n, Rng& rng);
Palace random_tree(int n, std::uint64_t seed);

/// Random tree plus `extra` uniformly chosen additional edges (capped at the
/// number of available non-edges).
Palace random_connected_graph(int n, int extra, Rng& rng);

}  // namespace palace
