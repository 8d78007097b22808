#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "guidepost/error.hpp"
#include "guidepost/factorization.hpp"

using namespace guidepost;
using namespace testgen;

namespace {

std::vector<int> random_word(Rng& rng, int letters, int length) {
  std::vector<int> w(length);
  for (int& x : w) x = uniform(rng, 0, letters - 1);
  return w;
}

int multiply_out(const std::vector<int>& w, const Homomorphism& h) {
  int acc = h.image[w[0]];
  for (std::size_t i = 1; i < w.size(); ++i) acc = h.semigroup->mul(acc, h.image[w[i]]);
  return acc;
}

}  // namespace

TEST_CASE("Green classes on a two-element left-zero semigroup") {
  // xy = x
  FiniteSemigroup s(2, {0, 0, 1, 1});
  CHECK(s.associativity_violation().empty());
  CHECK(s.r_class()[0] != s.r_class()[1]);
  CHECK(s.l_class()[0] == s.l_class()[1]);
  CHECK(s.j_class()[0] == s.j_class()[1]);
  FiniteSemigroup bad(2, {1, 0, 0, 0});
  CHECK_FALSE(bad.associativity_violation().empty());
}

TEST_CASE("rank recurrence") {
  FiniteSemigroup s(1, {0});
  Homomorphism h{{0}, &s};
  FactorizationTree leaf = factorize({0}, h);
  CHECK(leaf.kind == FactorizationTree::Kind::Leaf);
  CHECK(rank(leaf) == 1);

  FactorizationTree bin{FactorizationTree::Kind::Binary, 0, 0, 2,
                        {{FactorizationTree::Kind::Leaf, 0, 0, 1, {}}, {FactorizationTree::Kind::Leaf, 0, 1, 2, {}}}};
  CHECK(rank(bin) == 2);
  FactorizationTree many = factorize(std::vector<int>(40, 0), h);
  CHECK(many.kind == FactorizationTree::Kind::Unranked);
  CHECK(many.children.size() == 40);
  CHECK(rank(many) == 2);
  CHECK_THROWS_AS(factorize({}, h), PreconditionError);
  CHECK_THROWS_AS(factorize({3}, h), PreconditionError);
}

TEST_CASE("validator catches tampering") {
  FiniteSemigroup s(2, {0, 1, 1, 1});  // 0 is the identity, 1 absorbs
  Homomorphism h{{0, 1}, &s};
  std::vector<int> w{0, 1, 0, 0};
  FactorizationTree t = factorize(w, h);
  CHECK(validate_tree(t, w, h).empty());

  FactorizationTree unequal{FactorizationTree::Kind::Unranked, 1, 0, 2,
                            {{FactorizationTree::Kind::Leaf, 0, 0, 1, {}}, {FactorizationTree::Kind::Leaf, 1, 1, 2, {}}}};
  CHECK_FALSE(validate_tree(unequal, {0, 1}, h).empty());

  FactorizationTree tampered = t;
  FactorizationTree* node = &tampered;
  while (!node->children.empty()) node = &node->children.front();
  node->value = 1 - node->value;
  CHECK_FALSE(validate_tree(tampered, w, h).empty());
}

TEST_CASE("balanced trees are logarithmic") {
  FiniteSemigroup s(2, {0, 1, 1, 0});  // Z/2
  Homomorphism h{{0, 1}, &s};
  Rng rng(fuzz_seed() + 51);
  for (int len : {1, 2, 3, 17, 64, 300}) {
    std::vector<int> w = random_word(rng, 2, len);
    FactorizationTree t = balanced_factorization(w, h);
    CHECK(validate_tree(t, w, h).empty());
    CHECK(rank(t) <= 1 + static_cast<int>(std::ceil(std::log2(len))));
  }
}

TEST_CASE("property: factorization rank bound on random semigroups") {
  Rng rng(fuzz_seed() + 52);
  for (int iter = 0; iter < 300; ++iter) {
    FiniteSemigroup s = random_semigroup(rng, 6);
    REQUIRE(s.associativity_violation().empty());
    int letters = uniform(rng, 1, 4);
    Homomorphism h;
    h.semigroup = &s;
    for (int a = 0; a < letters; ++a) h.image.push_back(uniform(rng, 0, s.size() - 1));
    std::vector<int> w = random_word(rng, letters, uniform(rng, 1, 300));
    FactorizationTree t = factorize(w, h);
    CHECK(validate_tree(t, w, h).empty());
    CHECK(rank(t) <= rank_bound(s));
    CHECK(t.value == multiply_out(w, h));
    FactorizationTree g = green_factorization(w, h);
    CHECK(validate_tree(g, w, h).empty());
  }
}

TEST_CASE("optimal factorization is never worse than the others") {
  Rng rng(fuzz_seed() + 53);
  for (int iter = 0; iter < 60; ++iter) {
    FiniteSemigroup s = random_semigroup(rng, 5);
    Homomorphism h{{0, s.size() - 1}, &s};
    std::vector<int> w = random_word(rng, 2, uniform(rng, 1, 40));
    FactorizationTree o = optimal_factorization(w, h);
    CHECK(validate_tree(o, w, h).empty());
    CHECK(rank(o) <= rank(green_factorization(w, h)));
    CHECK(rank(o) <= rank(balanced_factorization(w, h)));
  }
}
