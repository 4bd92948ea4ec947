#include <functional>
#include <map>
#include <set>

#include "common/testlib.hpp"
#include "doctest.h"
#include "palace/characterize.hpp"
#include "palace/engine.hpp"
#include "palace/gen.hpp"
#include "palace/strategy.hpp"

using namespace palace;
using palace::testing::load_fixture;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::vector<std::string> labels_of(const Palace& g, const ProbeSequence& p) {
  return probe_labels(g, p);
}

std::set<std::string> label_set(const Palace& g, const std::vector<Vertex>& vs) {
  std::set<std::string> out;
  for (Vertex v : vs) out.insert(g.label(v));
  return out;
}

}  // namespace

TEST_CASE("linear search walks the fixture exactly as expected") {
  Palace bushy = load_fixture("bushy22.txt");
  std::vector<std::string> expect{"1", "2", "2a", "2",  "3",  "3a", "3",
                                  "4", "5", "5a", "5", "5a′", "5", "6"};
  CHECK(labels_of(bushy, linear_search(bushy)) == expect);
}

TEST_CASE("linear search on paths and spiders") {
  Palace p5 = make_path(5);
  CHECK(labels_of(p5, linear_search(p5)) ==
        std::vector<std::string>{"1", "2", "3"});

  Palace spider = make_spider({2, 2, 2});
  CHECK(labels_of(spider, linear_search(spider)) ==
        std::vector<std::string>{"a1", "x", "a3", "x", "a2"});
}

TEST_CASE("linear search refuses unsolvable palaces") {
  CHECK(kind_of([] { linear_search(forbidden_spider()); }) ==
        ErrorKind::Unsolvable);
  CHECK(kind_of([] { linear_strategy(forbidden_spider()); }) ==
        ErrorKind::Unsolvable);
}

TEST_CASE("the full strategy is the search plus its reversal") {
  Palace p17 = make_path(17);
  ProbeSequence s = linear_strategy(p17);
  CHECK(s.days() == 30);
  std::vector<std::string> expect;
  for (int i = 1; i <= 15; ++i) expect.push_back(std::to_string(i));
  for (int i = 15; i >= 1; --i) expect.push_back(std::to_string(i));
  CHECK(labels_of(p17, s) == expect);

  Palace p5 = make_path(5);
  CHECK(labels_of(p5, linear_strategy(p5)) ==
        std::vector<std::string>{"1", "2", "3", "3", "2", "1"});

  Palace p3 = make_path(3);
  CHECK(labels_of(p3, linear_strategy(p3)) ==
        std::vector<std::string>{"1", "1"});
}

TEST_CASE("optimal length follows the reduction size") {
  CHECK(optimal_length(make_path(17)) == 30);
  CHECK(optimal_length(make_path(3)) == 2);
  CHECK(optimal_length(make_path(1)) == 1);
  CHECK(optimal_length(make_path(2)) == 2);
  CHECK(optimal_length(load_fixture("bushy22.txt")) == 28);
  CHECK(kind_of([] { optimal_length(forbidden_spider()); }) ==
        ErrorKind::Unsolvable);
  CHECK(kind_of([] { optimal_length(make_cycle(5)); }) ==
        ErrorKind::Unsolvable);
}

TEST_CASE("the leaf partition of reduced palaces") {
  Palace spider = make_spider({2, 2, 2});
  VertexPartition p = vertex_partition(spider);
  CHECK(label_set(spider, p.leaf_neighbors) ==
        std::set<std::string>{"a1", "a2", "a3"});
  CHECK(label_set(spider, p.leaves) == std::set<std::string>{"b1", "b2", "b3"});
  CHECK(label_set(spider, p.interior) == std::set<std::string>{"x"});

  Palace p6 = make_path(6);
  VertexPartition q = vertex_partition(p6);
  CHECK(label_set(p6, q.leaf_neighbors) == std::set<std::string>{"1", "4"});
  CHECK(label_set(p6, q.leaves) == std::set<std::string>{"0", "5"});
  CHECK(label_set(p6, q.interior) == std::set<std::string>{"2", "3"});

  Palace p5 = make_path(5);
  VertexPartition r = vertex_partition(p5);
  CHECK(label_set(p5, r.leaf_neighbors) == std::set<std::string>{"1", "3"});
  CHECK(label_set(p5, r.leaves) == std::set<std::string>{"0", "4"});
  CHECK(label_set(p5, r.interior) == std::set<std::string>{"2"});
}

TEST_CASE("the partition rejects palaces outside its domain") {
  CHECK(kind_of([] { vertex_partition(make_path(4)); }) ==
        ErrorKind::Precondition);
  CHECK(kind_of([] { vertex_partition(parse_palace("0 1\n1 2\n2 3\n3 4\n2 m")); }) ==
        ErrorKind::Precondition);
  CHECK(kind_of([] { vertex_partition(forbidden_spider()); }) ==
        ErrorKind::Unsolvable);
}

TEST_CASE("the counting bound collapses to twice the size minus four") {
  CHECK(lower_bound(make_spider({2, 2, 2})) == 10);
  CHECK(lower_bound(make_path(6)) == 8);
  CHECK(lower_bound(make_path(17)) == 30);

  Rng rng(83);
  int rounds = 0;
  while (rounds < 40) {
    Palace g = reduce(random_tree(5 + int(rng.below(12)), rng)).result;
    if (g.size() <= 4 || !is_solvable(g).solvable()) continue;
    ++rounds;
    CHECK(lower_bound(g) == 2 * g.size() - 4);
  }
}

TEST_CASE("synthesized strategies win at the optimal length") {
  Rng rng(89);
  int rounds = 0;
  while (rounds < 50) {
    Palace g = random_tree(3 + int(rng.below(10)), rng);
    if (!is_solvable(g).solvable()) continue;
    ++rounds;
    ProbeSequence s = linear_strategy(g);
    CHECK(s.days() == optimal_length(g));
    VerificationResult v = verify_strategy(g, s);
    CHECK(v.caught);
    CHECK(v.capture_day <= s.days());
    CHECK(min_days_exact(g).days == s.days());
    CHECK(changes_parity(g, s));
  }
}

TEST_CASE("strategies probe the partition classes the right number of times") {
  Rng rng(97);
  int rounds = 0;
  while (rounds < 40) {
    Palace g = reduce(random_tree(5 + int(rng.below(10)), rng)).result;
    if (g.size() <= 4 || !is_solvable(g).solvable()) continue;
    ++rounds;
    VertexPartition part = vertex_partition(g);
    ProbeSequence forward = linear_search(g);
    ProbeSequence s = linear_strategy(g);
    std::map<Vertex, int> counts;
    for (Vertex v : s.probes) ++counts[v];
    for (Vertex b : part.leaves) {
      for (Vertex v : forward.probes) CHECK(v != b);
      CHECK(counts.count(b) == 0);
    }
    for (Vertex a : part.leaf_neighbors) CHECK(counts[a] == 2);
    for (Vertex q : part.interior) CHECK(counts[q] == 2 * (g.degree(q) - 1));

    int stays = 0;
    for (int d = 1; d < s.days(); ++d) {
      Vertex prev = s.probes[d - 1], cur = s.probes[d];
      CHECK((prev == cur || g.adjacent(prev, cur)));
      stays += prev == cur;
    }
    CHECK(stays == 1);
  }
}

TEST_CASE("linear strategies are recognized, including non-palindromic ones") {
  Palace p5 = make_path(5);
  CHECK(is_linear_strategy(p5, linear_strategy(p5)));
  // Same search twice with a jump back to the start: still two
  // opposite-parity searches, and still wins in six days.
  ProbeSequence repeat = probes_from_labels(p5, {"1", "2", "3", "1", "2", "3"});
  CHECK(verify_strategy(p5, repeat).caught);
  CHECK(is_linear_strategy(p5, repeat));

  CHECK(!is_linear_strategy(p5, probes_from_labels(p5, {"1", "2", "3"})));
  CHECK(!is_linear_strategy(
      p5, probes_from_labels(p5, {"1", "2", "3", "3", "1", "2"})));
  CHECK(!is_linear_strategy(
      p5, probes_from_labels(p5, {"1", "2", "2", "3", "3", "2", "2", "1"})));

  Rng rng(139);
  int rounds = 0;
  while (rounds < 25) {
    Palace g = random_tree(3 + int(rng.below(9)), rng);
    if (!is_solvable(g).solvable()) continue;
    ++rounds;
    CHECK(is_linear_strategy(g, linear_strategy(g)));
  }
}

TEST_CASE("winning schedules realize both parities") {
  Rng rng(101);
  for (int round = 0; round < 30; ++round) {
    Palace g = random_tree(2 + int(rng.below(10)), rng);
    if (!is_solvable(g).solvable()) continue;
    SolveResult r = min_days_exact(g);
    REQUIRE(r.solvable);
    CHECK(changes_parity(g, r.witness));
  }
}
