#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "guidepost/biinterface.hpp"
#include "guidepost/factorization.hpp"
#include "guidepost/guidance.hpp"

namespace guidepost {

// Budget arithmetic saturates at this value.
inline constexpr std::int64_t kBudgetCap = std::int64_t{1} << 62;

std::int64_t leaf_budget(int k);
std::int64_t binary_budget(int k, std::int64_t child_max);
std::int64_t unranked_budget(int k, std::int64_t child_max);

// Glued word with every letter expressed in the ids of the glued graph.
struct ColumnStructure {
  int arity = 0;
  Graph graph;
  std::vector<VertexSet> columns;
  std::vector<std::map<int, int>> left;
  std::vector<std::map<int, int>> right;
};

ColumnStructure column_structure(const std::vector<BiInterfaceGraph>& letters);

// Trees rooted at column interfaces spanning what they reach within nearby columns. A period of 0
// selects the default 2k^2+2, the smallest period for which equal colors never meet.
std::pair<GuidanceSystem, TreeColoring> locality_guidance(const ColumnStructure& cols, int period = 0);
inline int locality_color_bound(int k) { return 4 * k * (k * k + 1); }

Certificate combine_binary(const Certificate& left, const Certificate& right, const BiInterfaceGraph& gl,
                           const BiInterfaceGraph& gr);
Certificate combine_unranked(const std::vector<Certificate>& certs, const std::vector<BiInterfaceGraph>& letters);

struct BudgetEntry {
  int begin = 0;
  int end = 0;
  FactorizationTree::Kind kind = FactorizationTree::Kind::Leaf;
  std::int64_t budget = 0;
  int colors = 0;
  int width = -1;
};

struct PathwidthReport {
  int arity = 0;
  int word_length = 0;
  int semigroup_size = 0;
  int rank = 0;
  std::int64_t root_budget = 0;
  int root_colors = 0;
  // Factorization nodes in post-order.
  std::vector<BudgetEntry> nodes;
  FactorizationTree forest;
  bool within_budget() const;
};

// Certificate capturing all bags of a decomposition of g built from the path decomposition p;
// every intermediate certificate is verified.
Certificate certify_pathwidth(const Graph& g, const TreeDecomposition& p, PathwidthReport* report = nullptr);

}  // namespace guidepost
