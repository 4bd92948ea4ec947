#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* cli_path() {
  const char* path = std::getenv("PALACE_CLI");
  REQUIRE_MESSAGE(path, "PALACE_CLI must point at the palace binary");
  return path;
}

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("PALACE_FIXTURES");
  REQUIRE_MESSAGE(dir, "PALACE_FIXTURES must point at tests/data");
  return std::string(dir) + "/" + name;
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string out_file = "/tmp/palace_cli_out.txt";
  std::string err_file = "/tmp/palace_cli_err.txt";
  std::string command = env + " '" + std::string(cli_path()) + "' " + args +
                        " >" + out_file + " 2>" + err_file;
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

json strip_timing(json report) {
  report.erase("elapsed_ms");
  return report;
}

}  // namespace

TEST_CASE("check reports verdicts with matching exit codes") {
  RunResult solvable = run("check " + fixture("p17.txt"));
  CHECK(solvable.exit_code == 0);
  CHECK(contains(solvable.out, "Solvable"));

  RunResult cyclic = run("check " + fixture("c3.txt"));
  CHECK(cyclic.exit_code == 1);
  CHECK(contains(cyclic.out, "HasCycle"));
  CHECK(contains(cyclic.out, "0 1 2"));

  RunResult spidery = run("check " + fixture("t10.txt"));
  CHECK(spidery.exit_code == 1);
  CHECK(contains(spidery.out, "ContainsT"));
  CHECK(contains(spidery.out, "x"));

  RunResult malformed = run("check " + fixture("bad_duplicate.txt"));
  CHECK(malformed.exit_code == 2);
  CHECK(contains(malformed.err, "line 2"));

  CHECK(run("check " + fixture("bad_selfloop.txt")).exit_code == 2);
  CHECK(run("check " + fixture("bad_disconnected.txt")).exit_code == 2);
  CHECK(run("check " + fixture("bad_malformed.txt")).exit_code == 2);
  CHECK(run("check /nonexistent/palace.txt").exit_code == 2);
}

TEST_CASE("strategy prints schedules and honors --format") {
  RunResult p3 = run("strategy " + fixture("p3.txt"));
  CHECK(p3.exit_code == 0);
  CHECK(p3.out.substr(0, p3.out.find('\n')) == "1,1");

  RunResult p17 = run("strategy " + fixture("p17.txt") + " --format json");
  CHECK(p17.exit_code == 0);
  json report = json::parse(p17.out);
  CHECK(report["command"] == "strategy");
  CHECK(report["days"] == 30);
  CHECK(report["m"] == 17);
  CHECK(report["probes"].size() == 30);

  RunResult spider = run("strategy " + fixture("t10.txt"));
  CHECK(spider.exit_code == 1);
  CHECK(contains(spider.err, "Unsolvable"));

  // One-label-per-line probe files round-trip into verify.
  std::string probes_out = "/tmp/palace_strategy_probes.txt";
  RunResult saved =
      run("strategy " + fixture("p5.txt") + " -o " + probes_out);
  CHECK(saved.exit_code == 0);
  CHECK(slurp(probes_out) == "1\n2\n3\n3\n2\n1\n");
  RunResult replay =
      run("verify " + fixture("p5.txt") + " --probes-file " + probes_out);
  CHECK(replay.exit_code == 0);
  CHECK(contains(replay.out, "Caught on day 6"));
}

TEST_CASE("verify plays probe lists from flags and files") {
  RunResult caught = run("verify " + fixture("p3.txt") + " --probes 1,1");
  CHECK(caught.exit_code == 0);
  CHECK(contains(caught.out, "Caught on day 2"));

  RunResult escaped = run("verify " + fixture("p3.txt") + " --probes 0,0");
  CHECK(escaped.exit_code == 1);
  CHECK(contains(escaped.out, "Escape"));
  CHECK(contains(escaped.out, "walk: 2,1"));

  RunResult unknown = run("verify " + fixture("p3.txt") + " --probes 9,9");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "unknown vertex"));

  std::string probes_path = "/tmp/palace_probes.txt";
  std::ofstream(probes_path) << "1\n1\n";
  RunResult from_file =
      run("verify " + fixture("p3.txt") + " --probes-file " + probes_path);
  CHECK(from_file.exit_code == 0);

  RunResult traced =
      run("verify " + fixture("p3.txt") + " --probes 1,1 --trace");
  CHECK(contains(traced.out, "day 1: probe 1, candidates 3 [0 1 2]"));
  CHECK(contains(traced.out, "day 2: probe 1, candidates 1 [1]"));

  RunResult as_json =
      run("verify " + fixture("p3.txt") + " --probes 0,0 --json");
  json escape_report = json::parse(as_json.out);
  CHECK(escape_report["result"] == "Escape");
  CHECK(escape_report["probes"] == json::array({"0", "0"}));
  CHECK(escape_report["witness"] == json::array({"2", "1"}));

  CHECK(run("verify " + fixture("p3.txt")).exit_code == 2);
}

TEST_CASE("solve finds optima, respects caps, and stays deterministic") {
  RunResult p17 = run("solve " + fixture("p17.txt"));
  CHECK(p17.exit_code == 0);
  CHECK(contains(p17.out, "minimum days: 30"));

  RunResult spider = run("solve " + fixture("t10.txt"));
  CHECK(spider.exit_code == 1);
  CHECK(contains(spider.out, "Unsolvable"));

  RunResult capped = run("solve " + fixture("p23.txt"));
  CHECK(capped.exit_code == 2);
  CHECK(contains(capped.err, "22"));

  RunResult day_capped = run("solve " + fixture("p17.txt") + " --max-days 5");
  CHECK(day_capped.exit_code == 2);

  RunResult with = run("solve " + fixture("p5.txt") + " --json");
  RunResult without =
      run("solve " + fixture("p5.txt") + " --json --no-dominance");
  CHECK(strip_timing(json::parse(with.out)) ==
        strip_timing(json::parse(without.out)));

  RunResult again = run("solve " + fixture("p5.txt") + " --json");
  CHECK(strip_timing(json::parse(with.out)).dump() ==
        strip_timing(json::parse(again.out)).dump());
}

TEST_CASE("reduce reports removals and the reduced palace") {
  RunResult bushy = run("reduce " + fixture("bushy22.txt") + " --json");
  CHECK(bushy.exit_code == 0);
  json report = json::parse(bushy.out);
  CHECK(report["m"] == 16);
  CHECK(report["removed"].size() == 6);

  RunResult text = run("reduce " + fixture("p4.txt"));
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "m: 4"));
}

TEST_CASE("enumerate summarizes the optimal schedules") {
  RunResult p4 = run("enumerate " + fixture("p4.txt"));
  CHECK(p4.exit_code == 0);
  CHECK(contains(p4.out, "optimal days: 4"));
  CHECK(contains(p4.out, "no optimal sequence probes a leaf: true"));
  CHECK(contains(p4.out, "all sequences share one probe multiset: true"));

  RunResult tight = run("enumerate " + fixture("p5.txt"),
                        "PALACE_STATE_LIMIT=10");
  CHECK(tight.exit_code == 2);
  CHECK(contains(tight.err, "PALACE_STATE_LIMIT"));
}

TEST_CASE("random palaces embed their seed and regenerate exactly") {
  RunResult a = run("random --vertices 7 --seed 1");
  RunResult b = run("random --vertices 7 --seed 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "# seed 1"));
  CHECK(run("random --vertices 7 --seed 2").out != a.out);
}

TEST_CASE("bench compares the closed form against the exact solver") {
  std::string corpus = "/tmp/palace_bench_corpus";
  int rc = std::system(("rm -rf " + corpus + " && mkdir -p " + corpus).c_str());
  REQUIRE(rc == 0);
  std::ofstream(corpus + "/p5.txt") << "0 1\n1 2\n2 3\n3 4\n";
  std::ofstream(corpus + "/c4.txt") << "0 1\n1 2\n2 3\n3 0\n";
  RunResult bench = run("bench --corpus " + corpus + " --json");
  CHECK(bench.exit_code == 0);
  json report = json::parse(bench.out);
  REQUIRE(report["rows"].size() == 2);
  CHECK(report["rows"][1]["file"] == "p5.txt");
  CHECK(report["rows"][1]["closed_form"] == "6");
  CHECK(report["rows"][1]["exact"] == "6");
  CHECK(report["rows"][1]["agree"] == "yes");
  CHECK(report["rows"][0]["closed_form"] == "unsolvable");
  CHECK(report["rows"][0]["agree"] == "yes");

  CHECK(run("bench --corpus /nonexistent").exit_code == 2);
}

TEST_CASE("dot emits a graph description") {
  RunResult dot = run("dot " + fixture("p3.txt"));
  CHECK(dot.exit_code == 0);
  CHECK(contains(dot.out, "\"0\" -- \"1\";"));
  CHECK(contains(dot.out, "\"1\" -- \"2\";"));
}
