#include "palace/report.hpp"

#include <cstdio>

namespace palace {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string input_digest(const Palace& g) {
  if (g.is_tree()) return canonical_form(g);
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(to_edge_list(g))));
  return buf;
}

}  // namespace palace
