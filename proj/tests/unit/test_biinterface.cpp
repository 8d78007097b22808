#include "doctest.h"
#include "generators.hpp"
#include "guidepost/biinterface.hpp"
#include "guidepost/error.hpp"
#include "guidepost/oracles.hpp"

using namespace guidepost;
using namespace testgen;

namespace {

BiInterfaceGraph random_letter(Rng& rng, int k, int first_id = 0) {
  BiInterfaceGraph g;
  g.arity = k;
  int n = uniform(rng, 1, k + 2);
  for (int v = first_id; v < first_id + n; ++v) g.graph.add_vertex(v);
  for (int u = first_id; u < first_id + n; ++u)
    for (int v = u + 1; v < first_id + n; ++v)
      if (coin(rng, 0.4)) g.graph.add_edge(u, v);
  std::vector<int> verts = g.graph.vertices();
  std::shuffle(verts.begin(), verts.end(), rng);
  for (int i = 1; i <= k && i <= n; ++i)
    if (coin(rng, 0.7)) g.left[i] = verts[i - 1];
  std::shuffle(verts.begin(), verts.end(), rng);
  for (int i = 1; i <= k && i <= n; ++i) {
    int v = verts[i - 1];
    bool clash = false;
    for (auto [j, w] : g.left)
      if (w == v && j != i) clash = true;
    if (!clash && coin(rng, 0.7)) g.right[i] = v;
  }
  return g;
}

}  // namespace

TEST_CASE("gluing without fusion is a disjoint union") {
  BiInterfaceGraph a{1, Graph({1, 2}, {{1, 2}}), {{1, 1}}, {{1, 2}}};
  BiInterfaceGraph b{1, Graph({1, 2}, {{1, 2}}), {}, {{1, 2}}};
  BiInterfaceGraph g = glue(a, b);
  CHECK(g.graph.num_vertices() == 4);
  CHECK(g.graph.num_edges() == 2);
  CHECK(g.left == a.left);
  CHECK(g.right.size() == 1);
  CHECK(g.graph.neighbors(g.right.at(1)).size() == 1);
}

TEST_CASE("gluing single interface vertices fuses them") {
  BiInterfaceGraph a{1, Graph({5}), {}, {{1, 5}}};
  BiInterfaceGraph b{1, Graph({9}), {{1, 9}}, {}};
  BiInterfaceGraph g = glue(a, b);
  CHECK(g.graph.vertices() == VertexSet{5});
  CHECK(g.right.empty());
}

TEST_CASE("gluing removes parallel edges") {
  BiInterfaceGraph a{2, Graph({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}), {}, {{1, 1}, {2, 2}}};
  BiInterfaceGraph b{2, Graph({4, 5, 6}, {{4, 5}, {4, 6}, {5, 6}}), {{1, 4}, {2, 5}}, {}};
  BiInterfaceGraph g = glue(a, b);
  CHECK(g.graph.num_vertices() == 4);
  CHECK(g.graph.num_edges() == 5);
  CHECK(g.graph.adjacent(1, 2));
  CHECK_THROWS_AS(glue(a, BiInterfaceGraph{3, Graph({1}), {}, {}}), PreconditionError);
}

TEST_CASE("glue word laws") {
  Rng rng(fuzz_seed() + 41);
  BiInterfaceGraph one = random_letter(rng, 2);
  GluedWord single = glue_word({one});
  CHECK(single.glued == one);
  for (auto [v, w] : single.columns[0]) CHECK(v == w);
  CHECK_THROWS_AS(glue_word({}), PreconditionError);
  for (int iter = 0; iter < 300; ++iter) {
    int k = uniform(rng, 1, 3);
    BiInterfaceGraph a = random_letter(rng, k, 0), b = random_letter(rng, k, 10), c = random_letter(rng, k, 20);
    CHECK(glue(glue(a, b), c) == glue(a, glue(b, c)));
    CHECK(glue_word({a, b, c}).glued == glue(glue(a, b), c));
  }
}

TEST_CASE("abstractions are torsos on interfaces") {
  BiInterfaceGraph full{2, Graph({1, 2}, {{1, 2}}), {{1, 1}}, {{2, 2}}};
  Abstraction a = abstraction(full);
  CHECK(a.role_sets.size() == 2);
  CHECK(a.edges.size() == 1);

  BiInterfaceGraph chain{1, path_graph(4), {{1, 1}}, {{1, 4}}};
  CHECK(abstraction(chain).edges.size() == 1);

  BiInterfaceGraph lonely{1, Graph({1, 2}), {{1, 1}}, {}};
  Abstraction l = abstraction(lonely);
  CHECK(l.role_sets.size() == 1);
  CHECK(l.edges.empty());
  CHECK(abstraction(representative(l)) == l);
}

TEST_CASE("identity letter is idempotent") {
  for (int k = 1; k <= 3; ++k) {
    Abstraction e = abstraction(identity_letter(k));
    CHECK(abstraction_product(e, e) == e);
  }
  Abstraction empty = abstraction(BiInterfaceGraph{1, Graph({1}), {}, {}});
  Abstraction x = abstraction(BiInterfaceGraph{1, path_graph(2), {{1, 1}}, {{1, 2}}});
  Abstraction p = abstraction_product(x, empty);
  CHECK(p.role_sets.size() == 1);
}

TEST_CASE("property: abstraction is compositional") {
  Rng rng(fuzz_seed() + 42);
  for (int iter = 0; iter < 2000; ++iter) {
    int k = uniform(rng, 1, 3);
    BiInterfaceGraph a = random_letter(rng, k), b = random_letter(rng, k);
    CHECK(a.problems().empty());
    CHECK(abstraction_product(abstraction(a), abstraction(b)) == abstraction(glue(a, b)));
  }
}

TEST_CASE("generated semigroups") {
  AbstractionSemigroup one = generated_semigroup({abstraction(identity_letter(2))});
  CHECK(one.semigroup.size() == 1);

  Graph c6 = cycle_graph(6);
  OracleResult pw = exact_pathwidth(c6);
  Word w = path_decomposition_to_word(c6, pw.witness);
  std::vector<Abstraction> letters;
  for (const auto& l : w.letters) letters.push_back(abstraction(l));
  AbstractionSemigroup s = generated_semigroup(letters);
  AbstractionSemigroup again = generated_semigroup(letters);
  CHECK(s.semigroup.size() == again.semigroup.size());
  CHECK(s.semigroup.size() == 22);
  CHECK(s.semigroup.associativity_violation().empty());
  for (std::size_t i = 0; i < letters.size(); ++i) CHECK(s.elements[s.generators[i]] == letters[i]);
  for (int a = 0; a < s.semigroup.size(); ++a)
    for (int b = 0; b < s.semigroup.size(); ++b)
      CHECK(s.elements[s.semigroup.mul(a, b)] == abstraction_product(s.elements[a], s.elements[b]));
}

TEST_CASE("words from path decompositions") {
  Graph single = complete_graph(3);
  Word one = path_decomposition_to_word(single, path_from_bags({{1, 2, 3}}));
  REQUIRE(one.letters.size() == 1);
  CHECK(one.letters[0].left.empty());
  CHECK(one.letters[0].right.empty());

  Graph p4 = path_graph(4);
  Word w = path_decomposition_to_word(p4, path_from_bags({{1, 2}, {2, 3}, {3, 4}}));
  CHECK(w.arity == 1);
  CHECK(w.letters.size() == 3);
  CHECK(glue_word(w.letters).glued.graph == p4);

  Graph c6 = cycle_graph(6);
  Word cw = path_decomposition_to_word(c6, exact_pathwidth(c6).witness);
  CHECK(cw.arity == 2);
  CHECK(glue_word(cw.letters).glued.graph == c6);
  CHECK_THROWS_AS(path_decomposition_to_word(p4, path_from_bags({{1, 2}, {3, 4}})), PreconditionError);
}

TEST_CASE("property: word round trip preserves the graph") {
  Rng rng(fuzz_seed() + 43);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = random_graph(rng, uniform(rng, 1, 9), 0.3);
    TreeDecomposition p = random_path_decomposition(rng, g);
    Word w = path_decomposition_to_word(g, p);
    CHECK(glue_word(w.letters).glued.graph == g);
    for (const auto& l : w.letters) {
      CHECK(static_cast<int>(l.graph.num_vertices()) <= w.arity + 1);
      CHECK(l.problems().empty());
      for (auto [i, v] : l.left) CHECK((i >= 1 && i <= w.arity));
      for (auto [i, v] : l.right) CHECK((i >= 1 && i <= w.arity));
    }
  }
}
