#include <doctest.h>

#include <algorithm>
#include <set>

#include "reference.hpp"
#include "tvsb/connectivity.hpp"
#include "tvsb/generator.hpp"

using namespace tvsb;

TEST_CASE("splitmix64 reference outputs") {
  RngState rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);

  RngState a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("bounded draws") {
  RngState rng(0);
  CHECK(rng.below(10) == 5);  // 0xE220A8397B1DCDAF % 10
  CHECK(rng.below(10) == 0);
  RngState one(123);
  for (int i = 0; i < 20; ++i) CHECK(one.below(1) == 0);
  CHECK_THROWS_AS(one.below(0), Error);
}

TEST_CASE("n = 4 always yields the complete bidirected graph") {
  for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 123456789ULL}) {
    DiGraph g = generate({4, seed});
    CHECK(g.m() == 12);
    auto es = ref::edges_of(g);
    std::sort(es.begin(), es.end());
    CHECK(DiGraph(4, es) == fixtures::bk4());
  }
}

// Frozen from an independent Python implementation of the same procedure
// (splitmix64 draws, networkx feasibility checks).
TEST_CASE("cross-implementation generator output") {
  DiGraph g = generate({10, 1});
  const char* expected =
      "10 37\n5 9\n0 5\n1 8\n5 3\n7 0\n4 2\n6 9\n5 1\n6 4\n5 6\n3 9\n9 1\n1 4\n6 2\n3 6\n5 0\n3 1\n8 4\n2 9\n"
      "5 8\n1 2\n9 8\n2 7\n1 9\n3 2\n8 6\n0 9\n0 3\n8 2\n1 3\n5 7\n8 5\n7 2\n9 7\n9 4\n3 8\n4 0\n";
  CHECK(serialize(g) == expected);
  CHECK(g.m() >= 30);
  CHECK(is_2v_strongly_biconnected(g));
  CHECK(ref::two_v_strongly_biconnected(g));

  CHECK(generate({12, 7}).m() == 81);
  CHECK(generate({20, 3}).m() == 119);
}

TEST_CASE("generator is deterministic and always feasible") {
  for (int n : {5, 6, 8, 10, 15, 25}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      DiGraph g = generate({n, seed});
      CHECK(g == generate({n, seed}));
      CHECK(is_2v_strongly_biconnected(g));
      CHECK(g.m() >= std::min(3 * n, n * (n - 1)));
      if (n <= 10) CHECK(ref::two_v_strongly_biconnected(g));
    }
  }
}

TEST_CASE("generator rejects n < 4") {
  CHECK_THROWS_WITH_AS(generate({3, 1}), "n must be >= 4", Error);
  CHECK_THROWS_AS(generate({0, 1}), Error);
}
