#include <doctest.h>

#include <random>

#include "reference.hpp"
#include "tvsb/connectivity.hpp"
#include "tvsb/dominators.hpp"

using namespace tvsb;
namespace fx = tvsb::fixtures;

using Set = std::vector<VertexId>;

TEST_CASE("dominator trees of fixtures") {
  auto chain = dominator_tree(fx::chain4(), 0);
  CHECK(chain.idom == Set{-1, 0, 1, 2});

  auto diamond = dominator_tree(fx::diamond(), 0);
  CHECK(diamond.idom == Set{-1, 0, 0, 0});

  auto c4 = dominator_tree(fx::c4(), 0);
  CHECK(c4.idom == Set{-1, 0, 1, 2});
  CHECK(c4.dominates(1, 3));
  CHECK_FALSE(diamond.dominates(1, 3));

  auto unreachable = dominator_tree(fx::chain4(), 2);
  CHECK_FALSE(unreachable.is_reachable(0));
  CHECK(unreachable.idom[0] == -1);
  CHECK(unreachable.idom[3] == 2);

  CHECK_THROWS_AS(dominator_tree(fx::c4(), 4), Error);
}

TEST_CASE("nontrivial dominators") {
  CHECK(nontrivial_dominators(fx::diamond(), 0).empty());
  CHECK(nontrivial_dominators(fx::chain4(), 0) == Set{1, 2});
  CHECK(nontrivial_dominators(fx::bk4(), 0).empty());
  CHECK_THROWS_AS(nontrivial_dominators(fx::chain4(), 1), Error);
}

TEST_CASE("fast strong articulation points on fixtures") {
  CHECK(strong_articulation_points_fast(fx::diamond()) == Set{0, 3});
  CHECK(strong_articulation_points_fast(fx::bbowtie()) == Set{0});
  CHECK(strong_articulation_points_fast(fx::bk4()).empty());
  CHECK(strong_articulation_points_fast(fx::c4()) == Set{0, 1, 2, 3});
  CHECK_THROWS_AS(strong_articulation_points_fast(fx::chain4()), Error);
  CHECK(is_2vertex_connected(fx::oct8(), SapMethod::dominators));
  CHECK_FALSE(is_2vertex_connected(fx::c4(), SapMethod::dominators));
}

TEST_CASE("fast and brute-force strong articulation points agree") {
  std::mt19937_64 rng(31337);
  int checked = 0;
  while (checked < 300) {
    int n = 3 + static_cast<int>(rng() % 48);
    int extra = static_cast<int>(rng() % (2 * n + 1));
    DiGraph g = ref::random_strongly_connected(n, extra, rng);
    CAPTURE(serialize(g));
    CHECK(strong_articulation_points_fast(g) == strong_articulation_points_bruteforce(g));
    if (n <= 12) CHECK(strong_articulation_points_fast(g) == ref::strong_articulation_points(g));
    ++checked;
  }
}

TEST_CASE("every nontrivial dominator cuts some vertex off the root") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 20);
    DiGraph g = ref::random_strongly_connected(n, static_cast<int>(rng() % n), rng);
    for (VertexId v : nontrivial_dominators(g, 0)) {
      std::vector<char> dead(n, 0);
      dead[v] = 1;
      auto r = ref::reach(n, ref::edges_of(g), 0, dead, true);
      int reached = static_cast<int>(std::count(r.begin(), r.end(), 1));
      CHECK(reached < n - 1);
    }
  }
}

TEST_CASE("dominator tree does not depend on edge order") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 25);
    DiGraph g = ref::random_digraph(n, 0.15, rng);
    auto base = dominator_tree(g, 0);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      auto es = ref::edges_of(g);
      std::shuffle(es.begin(), es.end(), rng);
      auto other = dominator_tree(DiGraph(n, es), 0);
      CHECK(other.idom == base.idom);
      CHECK(other.reachable == base.reachable);
    }
  }
}

TEST_CASE("idom lies on every root path") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    DiGraph g = ref::random_digraph(n, 0.2, rng);
    auto t = dominator_tree(g, 0);
    auto es = ref::edges_of(g);
    for (VertexId v = 1; v < n; ++v) {
      if (!t.is_reachable(v)) continue;
      VertexId d = t.idom[v];
      REQUIRE(d >= 0);
      if (d == 0) continue;
      std::vector<char> dead(n, 0);
      dead[d] = 1;
      CHECK_FALSE(ref::reach(n, es, 0, dead, true)[v]);
    }
  }
}
