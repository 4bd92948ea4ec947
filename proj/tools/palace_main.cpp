#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "palace/adversary.hpp"
#include "palace/characterize.hpp"
#include "palace/engine.hpp"
#include "palace/gen.hpp"
#include "palace/graph.hpp"
#include "palace/probes.hpp"
#include "palace/report.hpp"
#include "palace/strategy.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace palace;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

class Stopwatch {
 public:
  long long ms() const {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Palace load_palace(const std::string& path) {
  return parse_palace(read_file(path));
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    size_t begin = item.find_first_not_of(" \t");
    size_t end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) continue;
    out.push_back(item.substr(begin, end - begin + 1));
  }
  return out;
}

std::vector<std::string> read_probe_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string join(const std::vector<std::string>& items,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json base_report(const std::string& command, const Palace& g) {
  json report;
  report["command"] = command;
  report["input_digest"] = input_digest(g);
  return report;
}

int cmd_check(const std::string& file, bool as_json) {
  Palace g = load_palace(file);
  Stopwatch timer;
  SolvabilityVerdict verdict = is_solvable(g);
  std::vector<std::string> witness;
  std::string result;
  switch (verdict.kind) {
    case SolvabilityVerdict::Kind::Solvable:
      result = "Solvable";
      break;
    case SolvabilityVerdict::Kind::HasCycle:
      result = "HasCycle";
      for (Vertex v : verdict.cycle) witness.push_back(g.label(v));
      break;
    case SolvabilityVerdict::Kind::ContainsT:
      result = "ContainsT";
      for (Vertex v : verdict.spider->all_vertices()) {
        witness.push_back(g.label(v));
      }
      break;
  }
  if (as_json) {
    json report = base_report("check", g);
    report["result"] = result;
    report["witness"] = witness;
    report["elapsed_ms"] = timer.ms();
    emit(report);
  } else if (witness.empty()) {
    std::cout << result << "\n";
  } else {
    std::cout << result << ": " << join(witness, " ") << "\n";
  }
  return verdict.solvable() ? kExitPositive : kExitNegative;
}

int cmd_strategy(const std::string& file, const std::string& format,
                 const std::string& output) {
  Palace g = load_palace(file);
  Stopwatch timer;
  int days = optimal_length(g);
  ProbeSequence seq;
  if (g.size() == 1) {
    seq.probes = {0};
  } else if (g.size() == 2) {
    seq.probes = {0, 0};
  } else {
    seq = linear_strategy(g);
  }
  int m = reduce(g).m;
  std::vector<std::string> labels = probe_labels(g, seq);
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) fail(ErrorKind::Io, "cannot write '" + output + "'");
    out << join(labels, "\n") << "\n";
  }
  if (format == "json") {
    json report = base_report("strategy", g);
    report["result"] = "ok";
    report["days"] = days;
    report["m"] = m;
    report["probes"] = labels;
    report["elapsed_ms"] = timer.ms();
    emit(report);
  } else {
    std::cout << join(labels, ",") << "\n";
    std::cout << "days: " << days;
    if (g.size() >= 3) std::cout << " (= 2m - 4 with m = " << m << ")";
    std::cout << "\n";
  }
  return kExitPositive;
}

int cmd_verify(const std::string& file, const std::string& probes_csv,
               const std::string& probes_file, bool trace, bool as_json) {
  Palace g = load_palace(file);
  std::vector<std::string> labels = probes_file.empty()
                                        ? split_csv(probes_csv)
                                        : read_probe_file(probes_file);
  ProbeSequence seq = probes_from_labels(g, labels);
  Stopwatch timer;
  VerificationResult result = verify_strategy(g, seq);
  if (trace) {
    for (size_t d = 0; d < result.trace.size(); ++d) {
      Mask m = result.trace[d];
      std::cout << "day " << d + 1 << ": probe " << g.label(seq.probes[d])
                << ", candidates " << std::popcount(m) << " [";
      bool first = true;
      for (Vertex v = 0; v < g.size(); ++v) {
        if (m >> v & 1) {
          if (!first) std::cout << " ";
          std::cout << g.label(v);
          first = false;
        }
      }
      std::cout << "]\n";
    }
  }
  if (as_json) {
    json report = base_report("verify", g);
    report["result"] = result.caught ? "Caught" : "Escape";
    report["days"] = seq.days();
    report["probes"] = labels;
    if (result.caught) {
      report["capture_day"] = result.capture_day;
    } else {
      report["witness"] = probe_labels(g, ProbeSequence{result.walk->rooms});
    }
    report["elapsed_ms"] = timer.ms();
    emit(report);
  } else if (result.caught) {
    std::cout << "Caught on day " << result.capture_day << "\n";
  } else {
    std::cout << "Escape\n";
    std::cout << "walk: "
              << join(probe_labels(g, ProbeSequence{result.walk->rooms}), ",")
              << "\n";
  }
  return result.caught ? kExitPositive : kExitNegative;
}

int cmd_solve(const std::string& file, std::optional<int> max_days,
              bool no_dominance, bool as_json) {
  Palace g = load_palace(file);
  Stopwatch timer;
  SolveOptions opts;
  opts.max_days = max_days;
  opts.dominance_pruning = !no_dominance;
  SolveResult result = min_days_exact(g, opts);
  if (as_json) {
    json report = base_report("solve", g);
    report["result"] = result.solvable ? "Finite" : "Unsolvable";
    if (result.solvable) {
      report["days"] = result.days;
      report["probes"] = probe_labels(g, result.witness);
    }
    report["elapsed_ms"] = timer.ms();
    emit(report);
  } else if (result.solvable) {
    std::cout << "minimum days: " << result.days << "\n";
    std::cout << "witness: " << join(probe_labels(g, result.witness), ",")
              << "\n";
  } else {
    std::cout << "Unsolvable\n";
  }
  return result.solvable ? kExitPositive : kExitNegative;
}

int cmd_reduce(const std::string& file, bool as_json) {
  Palace g = load_palace(file);
  Stopwatch timer;
  ReductionReport report = reduce(g);
  if (as_json) {
    json out = base_report("reduce", g);
    out["result"] = "ok";
    out["m"] = report.m;
    json removed = json::array();
    for (const auto& [leaf, anchor] : report.removed) {
      removed.push_back(json::array({leaf, anchor}));
    }
    out["removed"] = removed;
    json edges = json::array();
    for (auto [u, v] : report.result.edges()) {
      edges.push_back(json::array(
          {report.result.label(u), report.result.label(v)}));
    }
    out["edges"] = edges;
    out["elapsed_ms"] = timer.ms();
    emit(out);
  } else {
    for (const auto& [leaf, anchor] : report.removed) {
      std::cout << "removed: " << leaf << " (was attached to " << anchor
                << ")\n";
    }
    std::cout << "m: " << report.m << "\n";
    std::cout << to_edge_list(report.result);
  }
  return kExitPositive;
}

int cmd_enumerate(const std::string& file, bool as_json) {
  Palace g = load_palace(file);
  Stopwatch timer;
  int days = optimal_length(g);
  std::vector<ProbeSequence> all = enumerate_optimal(g, days);

  bool no_leaf = true;
  for (const auto& seq : all) {
    for (Vertex v : seq.probes) no_leaf = no_leaf && g.degree(v) != 1;
  }
  bool single_multiset = true;
  std::map<Vertex, int> first_counts;
  for (size_t i = 0; i < all.size(); ++i) {
    std::map<Vertex, int> counts;
    for (Vertex v : all[i].probes) ++counts[v];
    if (i == 0) {
      first_counts = counts;
    } else {
      single_multiset = single_multiset && counts == first_counts;
    }
  }
  bool all_linear = true;
  for (const auto& seq : all) {
    all_linear = all_linear && is_linear_strategy(g, seq);
  }

  if (as_json) {
    json report = base_report("enumerate", g);
    report["result"] = "ok";
    report["days"] = days;
    report["count"] = all.size();
    json sequences = json::array();
    for (const auto& seq : all) sequences.push_back(probe_labels(g, seq));
    report["sequences"] = sequences;
    report["no_leaf_probes"] = no_leaf;
    report["single_multiset"] = single_multiset;
    report["all_linear"] = all_linear;
    report["elapsed_ms"] = timer.ms();
    emit(report);
  } else {
    std::cout << "optimal days: " << days << "\n";
    std::cout << "optimal sequences: " << all.size() << "\n";
    for (const auto& seq : all) {
      std::cout << join(probe_labels(g, seq), ",") << "\n";
    }
    std::cout << "no optimal sequence probes a leaf: "
              << (no_leaf ? "true" : "false") << "\n";
    std::cout << "all sequences share one probe multiset: "
              << (single_multiset ? "true" : "false") << "\n";
    std::cout << "all sequences are linear strategies: "
              << (all_linear ? "true" : "false") << "\n";
  }
  return kExitPositive;
}

int cmd_random(int vertices, std::uint64_t seed, const std::string& output) {
  if (vertices < 1) fail(ErrorKind::Precondition, "--vertices must be >= 1");
  Palace g = random_tree(vertices, seed);
  std::string text = "# seed " + std::to_string(seed) + "\n" + to_edge_list(g);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) fail(ErrorKind::Io, "cannot write '" + output + "'");
    out << text;
  }
  return kExitPositive;
}

int cmd_bench(const std::string& corpus, bool as_json) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpus)) {
    fail(ErrorKind::Io, "'" + corpus + "' is not a directory");
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.path().extension() == ".txt") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    fail(ErrorKind::Io, "no .txt palaces under '" + corpus + "'");
  }
  json rows = json::array();
  if (!as_json) {
    std::cout << "file\tn\tclosed\texact\tagree\tclosed_ms\texact_ms\n";
  }
  for (const auto& file : files) {
    json row;
    row["file"] = fs::path(file).filename().string();
    std::string closed = "-", exact = "-", agree = "-";
    long long closed_ms = 0, exact_ms = 0;
    try {
      Palace g = load_palace(file);
      row["n"] = g.size();
      Stopwatch ct;
      try {
        closed = std::to_string(optimal_length(g));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsolvable) throw;
        closed = "unsolvable";
      }
      closed_ms = ct.ms();
      if (g.size() <= kSolverVertexCap) {
        Stopwatch et;
        SolveResult r = min_days_exact(g);
        exact = r.solvable ? std::to_string(r.days) : "unsolvable";
        exact_ms = et.ms();
        agree = closed == exact ? "yes" : "NO";
      }
    } catch (const Error& e) {
      row["n"] = 0;
      closed = std::string("error: ") + e.what();
    }
    row["closed_form"] = closed;
    row["exact"] = exact;
    row["agree"] = agree;
    row["closed_ms"] = closed_ms;
    row["exact_ms"] = exact_ms;
    rows.push_back(row);
    if (!as_json) {
      std::cout << row["file"].get<std::string>() << "\t"
                << row["n"].get<int>() << "\t" << closed << "\t" << exact
                << "\t" << agree << "\t" << closed_ms << "\t" << exact_ms
                << "\n";
    }
  }
  if (as_json) {
    json report;
    report["command"] = "bench";
    report["rows"] = rows;
    emit(report);
  }
  return kExitPositive;
}

int cmd_dot(const std::string& file) {
  std::cout << to_dot(load_palace(file));
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver, verifier and experiment harness for the palace "
               "search game"};
  app.require_subcommand(1);

  std::string file, probes_csv, probes_file, output, corpus;
  std::string format = "text";
  bool as_json = false, trace = false, no_dominance = false;
  int max_days = 0, vertices = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "decide solvability");
  check->add_option("file", file)->required();
  check->add_flag("--json", as_json);

  auto* strategy = app.add_subcommand("strategy", "emit an optimal schedule");
  strategy->add_option("file", file)->required();
  strategy->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  strategy->add_option("-o,--output", output,
                       "also write the probes one per line");

  auto* verify = app.add_subcommand("verify", "play a schedule against every "
                                              "evader behavior");
  verify->add_option("file", file)->required();
  auto* popt = verify->add_option("--probes", probes_csv,
                                  "comma-separated probe labels");
  auto* fopt = verify->add_option("--probes-file", probes_file,
                                  "one probe label per line");
  popt->excludes(fopt);
  verify->add_flag("--trace", trace);
  verify->add_flag("--json", as_json);

  auto* solve = app.add_subcommand("solve", "exact minimum capture time");
  solve->add_option("file", file)->required();
  solve->add_option("--max-days", max_days);
  solve->add_flag("--no-dominance", no_dominance);
  solve->add_flag("--json", as_json);

  auto* reduce_cmd = app.add_subcommand("reduce", "strip removable leaves");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate",
                                       "all optimal schedules (small palaces)");
  enumerate->add_option("file", file)->required();
  enumerate->add_flag("--json", as_json);

  auto* random = app.add_subcommand("random", "sample a random tree palace");
  random->add_option("--vertices", vertices)->required();
  random->add_option("--seed", seed)->required();
  random->add_option("-o,--output", output);

  auto* bench = app.add_subcommand("bench", "closed form vs exact solver "
                                            "over a corpus directory");
  bench->add_option("--corpus", corpus)->required();
  bench->add_flag("--json", as_json);

  auto* dot = app.add_subcommand("dot", "DOT description of a palace");
  dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(file, as_json);
    if (strategy->parsed()) return cmd_strategy(file, format, output);
    if (verify->parsed()) {
      if (probes_csv.empty() && probes_file.empty()) {
        std::cerr << "error: provide --probes or --probes-file\n";
        return kExitError;
      }
      return cmd_verify(file, probes_csv, probes_file, trace, as_json);
    }
    if (solve->parsed()) {
      std::optional<int> cap;
      if (max_days > 0) cap = max_days;
      return cmd_solve(file, cap, no_dominance, as_json);
    }
    if (reduce_cmd->parsed()) return cmd_reduce(file, as_json);
    if (enumerate->parsed()) return cmd_enumerate(file, as_json);
    if (random->parsed()) return cmd_random(vertices, seed, output);
    if (bench->parsed()) return cmd_bench(corpus, as_json);
    if (dot->parsed()) return cmd_dot(file);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what()
              << "\n";
    return e.kind() == ErrorKind::Unsolvable ? kExitNegative : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
