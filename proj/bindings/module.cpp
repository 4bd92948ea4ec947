#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "palace/adversary.hpp"
#include "palace/characterize.hpp"
#include "palace/engine.hpp"
#include "palace/gen.hpp"
#include "palace/graph.hpp"
#include "palace/probes.hpp"
#include "palace/report.hpp"
#include "palace/strategy.hpp"

namespace py = pybind11;
using namespace palace;

namespace {

ProbeSequence to_probes(const Palace& g, const std::vector<std::string>& labels) {
  return probes_from_labels(g, labels);
}

std::vector<std::string> walk_labels(const Palace& g, const EscapeWalk& w) {
  std::vector<std::string> out;
  out.reserve(w.rooms.size());
  for (Vertex v : w.rooms) out.push_back(g.label(v));
  return out;
}

py::dict verdict_dict(const Palace& g, const SolvabilityVerdict& verdict) {
  py::dict out;
  switch (verdict.kind) {
    case SolvabilityVerdict::Kind::Solvable:
      out["verdict"] = "Solvable";
      out["witness"] = py::list();
      break;
    case SolvabilityVerdict::Kind::HasCycle: {
      out["verdict"] = "HasCycle";
      std::vector<std::string> cycle;
      for (Vertex v : verdict.cycle) cycle.push_back(g.label(v));
      out["witness"] = cycle;
      break;
    }
    case SolvabilityVerdict::Kind::ContainsT: {
      out["verdict"] = "ContainsT";
      std::vector<std::string> vs;
      for (Vertex v : verdict.spider->all_vertices()) vs.push_back(g.label(v));
      out["witness"] = vs;
      break;
    }
  }
  return out;
}

Parity parse_parity(const std::string& name) {
  if (name == "even") return Parity::Even;
  if (name == "odd") return Parity::Odd;
  fail(ErrorKind::Precondition, "parity must be 'even' or 'odd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact solver and verifier for the palace search game";

  py::register_exception<Error>(m, "PalaceError");

  py::class_<Palace>(m, "Palace")
      .def_property_readonly("size", &Palace::size)
      .def_property_readonly("edge_count", &Palace::edge_count)
      .def_property_readonly("labels", &Palace::labels)
      .def_property_readonly("is_tree", &Palace::is_tree)
      .def("degree",
           [](const Palace& g, const std::string& label) {
             return g.degree(g.require(label));
           })
      .def("neighbors",
           [](const Palace& g, const std::string& label) {
             std::vector<std::string> out;
             for (Vertex u : g.neighbors(g.require(label))) {
               out.push_back(g.label(u));
             }
             return out;
           })
      .def("edges",
           [](const Palace& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [u, v] : g.edges()) {
               out.emplace_back(g.label(u), g.label(v));
             }
             return out;
           })
      .def("to_edge_list", [](const Palace& g) { return to_edge_list(g); })
      .def("to_dot", [](const Palace& g) { return to_dot(g); })
      .def("__repr__", [](const Palace& g) {
        return "<Palace with " + std::to_string(g.size()) + " rooms>";
      });

  m.def("parse_palace", &parse_palace, py::arg("text"));
  m.def("path_palace", &make_path, py::arg("n"));
  m.def("cycle_palace", &make_cycle, py::arg("n"));
  m.def("spider_palace", &make_spider, py::arg("legs"));
  m.def("forbidden_spider", &forbidden_spider);
  m.def("random_tree",
        [](int n, std::uint64_t seed) { return random_tree(n, seed); },
        py::arg("n"), py::arg("seed"));
  m.def("canonical_form", &canonical_form, py::arg("palace"));
  m.def("input_digest", &input_digest, py::arg("palace"));

  m.def("bipartition",
        [](const Palace& g) -> std::optional<std::map<std::string, std::string>> {
          auto coloring = bipartition(g);
          if (!coloring) return std::nullopt;
          std::map<std::string, std::string> out;
          for (Vertex v = 0; v < g.size(); ++v) {
            out[g.label(v)] = coloring->white(v) ? "white" : "black";
          }
          return out;
        },
        py::arg("palace"));

  m.def("longest_path",
        [](const Palace& g) {
          std::vector<std::string> out;
          for (Vertex v : longest_path(g).path) out.push_back(g.label(v));
          return out;
        },
        py::arg("palace"));

  m.def("is_solvable",
        [](const Palace& g) { return verdict_dict(g, is_solvable(g)); },
        py::arg("palace"));

  m.def("removable_leaves",
        [](const Palace& g) {
          std::vector<std::string> out;
          for (Vertex v : removable_leaves(g)) out.push_back(g.label(v));
          return out;
        },
        py::arg("palace"));

  m.def("reduce",
        [](const Palace& g) {
          ReductionReport r = reduce(g);
          py::dict out;
          out["removed"] = r.removed;
          out["m"] = r.m;
          out["result"] = r.result;
          return out;
        },
        py::arg("palace"));

  m.def("linear_search",
        [](const Palace& g) { return probe_labels(g, linear_search(g)); },
        py::arg("palace"));
  m.def("linear_strategy",
        [](const Palace& g) { return probe_labels(g, linear_strategy(g)); },
        py::arg("palace"));
  m.def("optimal_length", &optimal_length, py::arg("palace"));

  m.def("vertex_partition",
        [](const Palace& g) {
          VertexPartition part = vertex_partition(g);
          auto labels = [&](const std::vector<Vertex>& vs) {
            std::vector<std::string> out;
            for (Vertex v : vs) out.push_back(g.label(v));
            return out;
          };
          py::dict out;
          out["A"] = labels(part.leaf_neighbors);
          out["B"] = labels(part.leaves);
          out["Q"] = labels(part.interior);
          return out;
        },
        py::arg("palace"));
  m.def("lower_bound", &lower_bound, py::arg("palace"));

  m.def("step",
        [](const Palace& g, const std::vector<std::string>& candidates,
           const std::string& probe) {
          Mask mask = 0;
          for (const auto& label : candidates) {
            mask |= Mask{1} << g.require(label);
          }
          Mask next = step(g, mask, g.require(probe));
          std::vector<std::string> out;
          for (Vertex v = 0; v < g.size(); ++v) {
            if (next >> v & 1) out.push_back(g.label(v));
          }
          return out;
        },
        py::arg("palace"), py::arg("candidates"), py::arg("probe"));

  m.def("verify_strategy",
        [](const Palace& g, const std::vector<std::string>& probes) {
          VerificationResult r = verify_strategy(g, to_probes(g, probes));
          py::dict out;
          out["caught"] = r.caught;
          if (r.caught) {
            out["capture_day"] = r.capture_day;
          } else {
            out["walk"] = walk_labels(g, *r.walk);
          }
          return out;
        },
        py::arg("palace"), py::arg("probes"));

  m.def("min_days_exact",
        [](const Palace& g, std::optional<int> max_days, bool dominance) {
          SolveOptions opts;
          opts.max_days = max_days;
          opts.dominance_pruning = dominance;
          SolveResult r = min_days_exact(g, opts);
          py::dict out;
          out["solvable"] = r.solvable;
          if (r.solvable) {
            out["days"] = r.days;
            out["witness"] = probe_labels(g, r.witness);
          }
          return out;
        },
        py::arg("palace"), py::arg("max_days") = std::nullopt,
        py::arg("dominance") = true);

  m.def("enumerate_optimal",
        [](const Palace& g, std::optional<int> days,
           std::optional<std::uint64_t> state_limit) {
          int n = days ? *days : optimal_length(g);
          std::vector<std::vector<std::string>> out;
          for (const auto& seq : enumerate_optimal(g, n, state_limit)) {
            out.push_back(probe_labels(g, seq));
          }
          return out;
        },
        py::arg("palace"), py::arg("days") = std::nullopt,
        py::arg("state_limit") = std::nullopt);

  m.def("cycle_evader",
        [](const Palace& g, const std::vector<std::string>& cycle,
           const std::vector<std::string>& probes, const std::string& parity) {
          std::vector<Vertex> cyc;
          for (const auto& label : cycle) cyc.push_back(g.require(label));
          EscapeWalk w =
              cycle_evader(g, cyc, to_probes(g, probes), parse_parity(parity));
          return walk_labels(g, w);
        },
        py::arg("palace"), py::arg("cycle"), py::arg("probes"),
        py::arg("parity") = "even");

  m.def("spider_evader",
        [](const Palace& g, const std::vector<std::string>& probes) {
          auto witness = contains_forbidden_spider(g);
          if (!witness) {
            fail(ErrorKind::Precondition,
                 "palace has no forbidden-spider witness");
          }
          return walk_labels(g, spider_evader(g, *witness, to_probes(g, probes)));
        },
        py::arg("palace"), py::arg("probes"));

  m.def("star_evader",
        [](const Palace& g, const std::string& center,
           const std::vector<std::string>& probes, const std::string& parity) {
          StarInstance s = star_instance(g, g.require(center));
          StarEvasion r =
              star_evader(g, s, to_probes(g, probes), parse_parity(parity));
          py::dict out;
          out["survived"] = r.survived;
          if (!r.survived) out["caught_day"] = r.caught_day;
          out["walk"] = walk_labels(g, r.walk);
          return out;
        },
        py::arg("palace"), py::arg("center"), py::arg("probes"),
        py::arg("parity") = "even");
}
