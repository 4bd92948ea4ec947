#include <algorithm>
#include <functional>

#include "common/testlib.hpp"
#include "doctest.h"
#include "palace/adversary.hpp"
#include "palace/engine.hpp"
#include "palace/gen.hpp"
#include "palace/strategy.hpp"

using namespace palace;
using palace::testing::random_probes;
using palace::testing::tree_containing_spider;

namespace {

void check_walk(const Palace& g, const ProbeSequence& p, const EscapeWalk& w) {
  REQUIRE(w.rooms.size() == p.probes.size());
  for (size_t d = 0; d < w.rooms.size(); ++d) {
    CHECK(w.rooms[d] != p.probes[d]);
    if (d > 0) CHECK(g.adjacent(w.rooms[d - 1], w.rooms[d]));
  }
}

ProbeSequence seq_of(const Palace& g, const std::vector<std::string>& labels) {
  return probes_from_labels(g, labels);
}

std::vector<Vertex> cycle_of(const Palace& g, int len) {
  std::vector<Vertex> cycle;
  for (int i = 0; i < len; ++i) cycle.push_back(g.require(std::to_string(i)));
  return cycle;
}

}  // namespace

TEST_CASE("the cycle evader dodges forever") {
  Palace c3 = make_cycle(3);
  ProbeSequence p = seq_of(c3, {"0", "1", "2"});
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    EscapeWalk w = cycle_evader(c3, cycle_of(c3, 3), p, parity);
    check_walk(c3, p, w);
  }

  Palace c4 = make_cycle(4);
  ProbeSequence alt;
  for (int i = 0; i < 50; ++i) {
    alt.probes.push_back(c4.require("0"));
    alt.probes.push_back(c4.require("2"));
  }
  EscapeWalk w = cycle_evader(c4, cycle_of(c4, 4), alt, Parity::Even);
  check_walk(c4, alt, w);
  CHECK(!verify_strategy(c4, alt).caught);
}

TEST_CASE("the cycle evader stays on its cycle inside a larger palace") {
  // A five-cycle with a chord and a tail; the named cycle is what counts.
  Palace g = parse_palace("0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n0 t1\nt1 t2");
  Rng rng(103);
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    ProbeSequence p = random_probes(g, 60, rng);
    EscapeWalk w = cycle_evader(g, cycle_of(g, 5), p, parity);
    check_walk(g, p, w);
    for (Vertex room : w.rooms) CHECK(room <= g.require("4"));
    for (size_t d = 1; d < w.rooms.size(); ++d) {
      int diff = std::abs(w.rooms[d] - w.rooms[d - 1]);
      CHECK((diff == 1 || diff == 4));  // cycle moves only, no chord hops
    }
  }
}

TEST_CASE("the spider evader survives a sibling strategy and random noise") {
  Palace t = forbidden_spider();
  auto witness = contains_forbidden_spider(t);
  REQUIRE(witness);

  Palace small = make_spider({3, 3, 2});
  ProbeSequence src = linear_strategy(small);
  ProbeSequence padded;
  for (int d = 0; d < 40; ++d) {
    padded.probes.push_back(
        t.require(small.label(src.probes[d % src.probes.size()])));
  }
  EscapeWalk w = spider_evader(t, *witness, padded);
  check_walk(t, padded, w);
  CHECK(!verify_strategy(t, padded).caught);

  Rng rng(107);
  for (int round = 0; round < 300; ++round) {
    ProbeSequence p = random_probes(t, 60, rng);
    check_walk(t, p, spider_evader(t, *witness, p));
    CHECK(!verify_strategy(t, p).caught);
  }
}

TEST_CASE("the spider evader handles an unprobed branch") {
  Palace t = forbidden_spider();
  auto witness = contains_forbidden_spider(t);
  REQUIRE(witness);
  Rng rng(109);
  ProbeSequence p;
  std::vector<std::string> pool{"x", "a2", "b2", "c2", "a3", "b3", "c3"};
  for (int d = 0; d < 60; ++d) {
    p.probes.push_back(t.require(pool[rng.below(pool.size())]));
  }
  check_walk(t, p, spider_evader(t, *witness, p));
}

TEST_CASE("the spider evader works inside larger palaces") {
  Rng rng(113);
  for (int round = 0; round < 20; ++round) {
    Palace host = tree_containing_spider(1 + int(rng.below(15)), rng);
    auto witness = contains_forbidden_spider(host);
    REQUIRE(witness);
    ProbeSequence p = random_probes(host, 60, rng);
    EscapeWalk w = spider_evader(host, *witness, p);
    check_walk(host, p, w);
    CHECK(!verify_strategy(host, p).caught);
  }
}

TEST_CASE("the star evader survives a center-shy searcher") {
  Palace star = make_spider({2, 2, 2});
  StarInstance s = star_instance(star, star.require("x"));
  CHECK(s.k() == 3);

  ProbeSequence p = seq_of(star, {"a1", "b1", "x", "a2", "b2", "a3", "b3",
                                  "a1", "b1", "a2"});
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    StarEvasion run = star_evader(star, s, p, parity);
    CHECK(run.survived);
    check_walk(star, p, run.walk);
  }
}

TEST_CASE("the two-branch star survives when one branch is never entered") {
  Palace star = make_spider({2, 2});
  StarInstance s = star_instance(star, star.require("x"));
  Rng rng(127);
  std::vector<std::string> pool{"x", "a1", "b1"};
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    for (int round = 0; round < 50; ++round) {
      ProbeSequence p;
      for (int d = 0; d < 40; ++d) {
        p.probes.push_back(star.require(pool[rng.below(pool.size())]));
      }
      StarEvasion run = star_evader(star, s, p, parity);
      CHECK(run.survived);
      check_walk(star, p, run.walk);
    }
  }
}

TEST_CASE("the optimal schedule defeats the star evader on both parities") {
  Palace star = make_spider({2, 2, 2});
  StarInstance s = star_instance(star, star.require("x"));
  ProbeSequence optimal = linear_strategy(star);
  REQUIRE(optimal.days() == 10);
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    StarEvasion run = star_evader(star, s, optimal, parity);
    CHECK(!run.survived);
    CHECK(run.caught_day <= 10);
  }
}

TEST_CASE("the star evader survives without long central sieges") {
  // k - 1 probes of the center on consecutive white days are necessary;
  // schedules without such a run must lose to the rule-following evader.
  Palace star = make_spider({2, 2, 2});
  StarInstance s = star_instance(star, star.require("x"));
  Vertex center = star.require("x");
  Rng rng(131);
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    int tested = 0;
    while (tested < 200) {
      ProbeSequence p = random_probes(star, 40, rng);
      int run = 0, worst = 0;
      for (int day = 1; day <= p.days(); ++day) {
        bool white = (day % 2 == 0) == (parity == Parity::Even);
        if (!white) continue;
        run = p.probes[day - 1] == center ? run + 1 : 0;
        worst = std::max(worst, run);
      }
      if (worst >= s.k() - 1) continue;
      ++tested;
      StarEvasion result = star_evader(star, s, p, parity);
      CHECK(result.survived);
    }
  }
}

TEST_CASE("evader walks always agree with the verifier") {
  Rng rng(137);
  for (int round = 0; round < 100; ++round) {
    Palace c = make_cycle(3 + int(rng.below(5)));
    std::vector<Vertex> cycle;
    for (Vertex v = 0; v < c.size(); ++v) cycle.push_back(v);
    ProbeSequence p = random_probes(c, 40, rng);
    EscapeWalk w = cycle_evader(c, cycle, p,
                                round % 2 ? Parity::Even : Parity::Odd);
    check_walk(c, p, w);
    CHECK(!verify_strategy(c, p).caught);
  }
}
