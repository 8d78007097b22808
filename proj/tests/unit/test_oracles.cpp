#include "doctest.h"
#include "generators.hpp"
#include "guidepost/error.hpp"
#include "guidepost/oracles.hpp"

using namespace guidepost;
using namespace testgen;

namespace {

void check_treewidth(const Graph& g, int expected) {
  OracleResult r = exact_treewidth(g);
  CHECK(r.parameter == expected);
  CHECK(treewidth_by_search(g) == expected);
  CHECK(validate_decomposition(g, r.witness).ok());
  CHECK(width(r.witness) == expected);
}

void check_pathwidth(const Graph& g, int expected) {
  OracleResult r = exact_pathwidth(g);
  CHECK(r.parameter == expected);
  CHECK(pathwidth_by_search(g) == expected);
  CHECK(validate_decomposition(g, r.witness).ok());
  CHECK(r.witness.is_path_forest());
  CHECK(width(r.witness) == expected);
}

Graph petersen() {
  Graph g;
  for (int v = 0; v < 10; ++v) g.add_vertex(v);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

GuidanceSystem six_cycle_system() {
  // Trees u -> u+1 -> u+2 on the cycle 0..5.
  GuidanceSystem s;
  for (int u = 0; u < 6; ++u) s.trees.push_back({(u + 2) % 6, {{u, (u + 1) % 6}, {(u + 1) % 6, (u + 2) % 6}}});
  return s;
}

}  // namespace

TEST_CASE("treewidth of reference families") {
  check_treewidth(Graph({1}), 0);
  for (int n = 2; n <= 7; ++n) check_treewidth(complete_graph(n), n - 1);
  for (int n = 3; n <= 12; ++n) check_treewidth(cycle_graph(n), 2);
  check_treewidth(grid_graph(3, 3), 3);
  check_treewidth(grid_graph(3, 4), 3);
  check_treewidth(petersen(), 4);
  Rng rng(fuzz_seed() + 21);
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i < 10; ++i) check_treewidth(random_tree(rng, n), 1);
}

TEST_CASE("pathwidth of reference families") {
  CHECK(exact_pathwidth(Graph{}).parameter == -1);
  CHECK(exact_pathwidth(Graph{}).witness.empty());
  CHECK(exact_treewidth(Graph{}).parameter == -1);
  check_pathwidth(path_graph(5), 1);
  check_pathwidth(cycle_graph(6), 2);
  check_pathwidth(complete_graph(5), 4);
  check_pathwidth(grid_graph(3, 3), 3);
  check_pathwidth(star_graph(6), 1);
  check_pathwidth(petersen(), 5);
  // Not a caterpillar (removing leaves leaves a claw), so pathwidth is 2.
  Graph claw_of_cherries({1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                         {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}, {4, 10}});
  check_pathwidth(claw_of_cherries, 2);
  check_pathwidth(caterpillar({2, 0, 3, 1}), 1);
}

TEST_CASE("oracles reject graphs above the cap") {
  CHECK_THROWS_AS(exact_treewidth(path_graph(kOracleVertexCap + 1)), ResourceLimitError);
  CHECK_THROWS_AS(exact_pathwidth(path_graph(kOracleVertexCap + 1)), ResourceLimitError);
}

TEST_CASE("treewidth witness follows the smallest optimal ordering") {
  OracleResult r = exact_treewidth(cycle_graph(5));
  CHECK(r.ordering == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("property: oracles agree with the search methods") {
  Rng rng(fuzz_seed() + 22);
  for (int iter = 0; iter < 400; ++iter) {
    int n = uniform(rng, 0, 9);
    Graph g = random_graph(rng, n, uniform(rng, 1, 9) / 10.0);
    OracleResult tw = exact_treewidth(g);
    OracleResult pw = exact_pathwidth(g);
    CHECK(tw.parameter == treewidth_by_search(g));
    CHECK(pw.parameter == pathwidth_by_search(g));
    CHECK(pw.parameter >= tw.parameter);
    CHECK(validate_decomposition(g, tw.witness).ok());
    CHECK(validate_decomposition(g, pw.witness).ok());
    CHECK(width(tw.witness) == tw.parameter);
    CHECK(width(pw.witness) == pw.parameter);
  }
}

TEST_CASE("minimum guidance colors") {
  GuidanceSystem disjoint;
  for (int v = 0; v < 4; ++v) disjoint.trees.push_back({v, {}});
  CHECK(min_guidance_colors(disjoint) == 1);
  CHECK(min_guidance_colors(GuidanceSystem{}) == 0);

  CHECK(min_guidance_colors(six_cycle_system()) == 3);

  GuidanceSystem star;
  for (int leaf = 1; leaf <= 5; ++leaf) star.trees.push_back({leaf, {{0, leaf}}});
  CHECK(min_guidance_colors(star) == 5);

  GuidanceSystem many;
  for (int v = 0; v <= kColoringTreeCap; ++v) many.trees.push_back({v, {}});
  CHECK_THROWS_AS(min_guidance_colors(many), ResourceLimitError);
}
