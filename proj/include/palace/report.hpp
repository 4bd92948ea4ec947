#pragma once

#include <cstdint>
#include <string>

#include "palace/graph.hpp"

namespace palace {

std::uint64_t fnv1a64(const std::string& data);

/// Stable identifier for an input palace: the canonical form for trees,
/// otherwise a hash of the canonical edge list.
std::string input_digest(const Palace& g);

}  // namespace palace
