#include "palace/probes.hpp"

namespace palace {

ProbeSequence probes_from_labels(const Palace& g,
                                 const std::vector<std::string>& labels) {
  ProbeSequence seq;
  seq.probes.reserve(labels.size());
  for (const auto& label : labels) {
    seq.probes.push_back(g.require(label));
  }
  return seq;
}

std::vector<std::string> probe_labels(const Palace& g,
                                      const ProbeSequence& p) {
  std::vector<std::string> out;
  out.reserve(p.probes.size());
  for (Vertex v : p.probes) out.push_back(g.label(v));
  return out;
}

}  // namespace palace
