#pragma once

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"
#include "guidepost/guidance.hpp"

namespace guidepost {

inline constexpr int kOracleVertexCap = 14;
inline constexpr int kColoringTreeCap = 16;

struct OracleResult {
  int parameter = -1;
  TreeDecomposition witness;
  std::vector<int> ordering;
};

// Treewidth by dynamic programming over eliminated vertex sets.
OracleResult exact_treewidth(const Graph& g);
// Pathwidth by dynamic programming over vertex-separation prefixes; the witness is a chain.
OracleResult exact_pathwidth(const Graph& g);
// Independent search over elimination orderings with pruning; used to cross-check.
int treewidth_by_search(const Graph& g);
// Independent search over vertex orderings with pruning; used to cross-check.
int pathwidth_by_search(const Graph& g);
// Decomposition induced by an elimination ordering of all vertices.
TreeDecomposition elimination_decomposition(const Graph& g, const std::vector<int>& order);
// Minimum colors so that trees of equal color are vertex-disjoint.
int min_guidance_colors(const GuidanceSystem& system);

}  // namespace guidepost
