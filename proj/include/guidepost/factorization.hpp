#pragma once

#include <string>
#include <vector>

#include "guidepost/semigroup.hpp"

namespace guidepost {

struct FactorizationTree {
  enum class Kind { Leaf, Binary, Unranked };
  Kind kind = Kind::Leaf;
  int value = -1;
  // Half-open span [begin, end) of word positions.
  int begin = 0;
  int end = 0;
  std::vector<FactorizationTree> children;
};

int rank(const FactorizationTree& t);
std::vector<std::string> validate_tree(const FactorizationTree& t, const std::vector<int>& word, const Homomorphism& h);
inline int rank_bound(const FiniteSemigroup& s) { return 3 * s.size(); }

// Construction by descent along J-classes; unranked nodes carry idempotent values.
FactorizationTree green_factorization(const std::vector<int>& word, const Homomorphism& h);
// Binary tree splitting every span at its middle.
FactorizationTree balanced_factorization(const std::vector<int>& word, const Homomorphism& h);
// Minimum-rank tree with idempotent unranked nodes, by dynamic programming over spans.
FactorizationTree optimal_factorization(const std::vector<int>& word, const Homomorphism& h);
// First of the constructions above whose rank is within 3|S|.
FactorizationTree factorize(const std::vector<int>& word, const Homomorphism& h);

const char* kind_name(FactorizationTree::Kind kind);

}  // namespace guidepost
