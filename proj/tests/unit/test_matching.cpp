#include <random>

#include "brute.hpp"
#include "doctest.h"

#include "binmms/errors.hpp"
#include "binmms/matching.hpp"

using namespace binmms;

TEST_CASE("maximumMatching examples") {
  BipartiteGraph complete(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t p = 0; p < 2; ++p) complete.addEdge(a, p);
  CHECK(maximumMatching(complete).size() == 2);

  CHECK(maximumMatching(BipartiteGraph(3, 3)).size() == 0);

  BipartiteGraph star(3, 1);
  for (std::size_t a = 0; a < 3; ++a) star.addEdge(a, 0);
  CHECK(maximumMatching(star).size() == 1);
}

TEST_CASE("envy-free matching examples") {
  BipartiteGraph g(2, 2);
  g.addEdge(0, 0);
  g.addEdge(0, 1);
  g.addEdge(1, 0);
  const auto m = maxCardinalityEnvyFreeMatching(g);
  CHECK(m.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}});

  BipartiteGraph contested(2, 1);
  contested.addEdge(0, 0);
  contested.addEdge(1, 0);
  CHECK(maxCardinalityEnvyFreeMatching(contested).size() == 0);

  BipartiteGraph lonely(2, 2);
  lonely.addEdge(0, 0);
  const auto l = maxCardinalityEnvyFreeMatching(lonely);
  CHECK(l.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
  CHECK(l.partOf(0) == 0u);
  CHECK_FALSE(l.partOf(1).has_value());
}

TEST_CASE("graph contract") {
  BipartiteGraph g(2, 2);
  CHECK_THROWS_AS(g.addEdge(2, 0), ContractViolationError);
  CHECK_THROWS_AS(g.addEdge(0, 5), ContractViolationError);
  g.addEdge(1, 1);
  g.addEdge(1, 1);
  CHECK(g.partsOf(1).size() == 1);
  CHECK(g.hasEdge(1, 1));
  CHECK_FALSE(g.hasEdge(0, 1));
}

TEST_CASE("isEnvyFreeMatching detects envy and conflicts") {
  BipartiteGraph g(2, 1);
  g.addEdge(0, 0);
  g.addEdge(1, 0);
  CHECK_FALSE(isEnvyFreeMatching(g, Matching{{{0, 0}}}));
  CHECK(isEnvyFreeMatching(g, Matching{}));
  BipartiteGraph h(2, 2);
  h.addEdge(0, 0);
  h.addEdge(1, 0);
  CHECK_FALSE(isEnvyFreeMatching(h, Matching{{{0, 0}, {1, 0}}}));
  CHECK_FALSE(isEnvyFreeMatching(h, Matching{{{0, 1}}}));
}

TEST_CASE("random graphs agree with brute force") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = brute::randomGraph(rng, 6);
    const auto m = maxCardinalityEnvyFreeMatching(g);
    CHECK(isEnvyFreeMatching(g, m));
    CHECK(m.size() == brute::maxEnvyFreeSize(g));
    CHECK(maximumMatching(g).size() >= m.size());
  }
}

TEST_CASE("an agent adjacent to every part forces a non-empty matching") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = brute::randomHubGraph(rng, 8);
    CHECK(maxCardinalityEnvyFreeMatching(g).size() > 0);
  }
  // With fewer parts than agents the premise alone is not enough.
  BipartiteGraph crowded(3, 1);
  for (std::size_t a = 0; a < 3; ++a) crowded.addEdge(a, 0);
  CHECK(maxCardinalityEnvyFreeMatching(crowded).size() == 0);
}
