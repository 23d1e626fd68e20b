#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rst/bfs_rst.hpp"
#include "rst/validate.hpp"

using namespace rst;
using rst::testing::graph_from_edges;
using rst::testing::two_triangles;

namespace {

Graph make(const char* spec, std::uint64_t seed = 0) {
  return build_csr(generate(parse_gen_spec(spec), seed));
}

}  // namespace

TEST_SUITE_BEGIN("bfs");

TEST_CASE("path levels match the distance oracle") {
  auto g = make("path:10");
  StepEngine e;
  auto f = bfs_rst(g, 0, e);
  CHECK(validate_rooted_forest(g, f, 0).valid);
  CHECK(f.levels == oracle_bfs_levels(g, 0));
  // one init step, one step per level 1..9, one final step that sees no change
  CHECK(e.steps() == 11);
}

TEST_CASE("star completes in three steps") {
  auto g = make("star:10");
  StepEngine e;
  auto f = bfs_rst(g, 0, e);
  CHECK(e.steps() == 3);
  CHECK(forest_depth(f).max_depth == 1);
  for (Vertex v = 1; v < 10; ++v) CHECK(f.parent[static_cast<size_t>(v)] == 0);
}

TEST_CASE("grid levels and parents are consistent") {
  auto g = make("grid:5:7");
  StepEngine e;
  auto f = bfs_rst(g, 0, e);
  REQUIRE(validate_rooted_forest(g, f, 0).valid);
  auto want = oracle_bfs_levels(g, 0);
  CHECK(f.levels == want);
  for (Vertex v = 1; v < g.n; ++v) {
    auto p = f.parent[static_cast<size_t>(v)];
    CHECK(f.levels[static_cast<size_t>(v)] ==
          f.levels[static_cast<size_t>(p)] + 1);
  }
}

TEST_CASE("ties go to the smallest-id discoverer") {
  // 3 is reachable at level 2 via both 1 and 2; 1 wins.
  auto g = graph_from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  StepEngine e;
  auto f = bfs_rst(g, 0, e);
  CHECK(f.parent[3] == 1);
  CHECK(f.levels == std::vector<std::int64_t>{0, 1, 1, 2});
}

TEST_CASE("extra components are seeded from their smallest vertex") {
  auto g = two_triangles();
  StepEngine e;
  auto f = bfs_rst(g, 0, e);
  REQUIRE(validate_rooted_forest(g, f, 0).valid);
  CHECK(f.roots == std::vector<Vertex>{0, 3});
  CHECK(f.parent[4] == 3);
  CHECK(f.parent[5] == 3);
  CHECK(f.levels[3] == 0);
  CHECK(f.levels[4] == 1);
  CHECK(e.steps() == 6);
}

TEST_CASE("nonzero root") {
  auto g = make("path:8");
  StepEngine e;
  auto f = bfs_rst(g, 3, e);
  REQUIRE(validate_rooted_forest(g, f, 3).valid);
  CHECK(f.parent[3] == 3);
  CHECK(f.levels == oracle_bfs_levels(g, 3));
  CHECK(forest_depth(f).max_depth == 4);
}

TEST_CASE("random graphs match the oracle on the root component") {
  for (std::uint64_t seed : {1, 2, 3}) {
    auto g = build_csr(gen_random(200, 0.02, seed));
    StepEngine e;
    auto f = bfs_rst(g, 0, e);
    REQUIRE(validate_rooted_forest(g, f, 0).valid);
    auto want = oracle_bfs_levels(g, 0);
    for (Vertex v = 0; v < g.n; ++v) {
      if (want[static_cast<size_t>(v)] != kNone)
        CHECK(f.levels[static_cast<size_t>(v)] ==
              want[static_cast<size_t>(v)]);
    }
  }
}

TEST_CASE("results are identical for any worker count") {
  auto g = build_csr(gen_random(3000, 0.002, 11));
  StepEngine e1(1), e8(8);
  auto f1 = bfs_rst(g, 0, e1);
  auto f8 = bfs_rst(g, 0, e8);
  CHECK(f1.parent == f8.parent);
  CHECK(f1.levels == f8.levels);
  CHECK(e1.steps() == e8.steps());
  CHECK(e1.work() == e8.work());
}

TEST_CASE("single vertex") {
  auto g = make("path:1");
  StepEngine e;
  auto f = bfs_rst(g, 0, e);
  CHECK(f.parent == std::vector<Vertex>{0});
  CHECK(f.roots == std::vector<Vertex>{0});
  CHECK(validate_rooted_forest(g, f, 0).valid);
}

TEST_CASE("root out of range throws") {
  auto g = make("path:4");
  StepEngine e;
  CHECK_THROWS(bfs_rst(g, 4, e));
  CHECK_THROWS(bfs_rst(g, -1, e));
}

TEST_SUITE_END();
