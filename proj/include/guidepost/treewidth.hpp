#pragma once

#include <map>
#include <string>
#include <vector>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"
#include "guidepost/guidance.hpp"

namespace guidepost {

inline int load_bound(int k) { return 2 * k * k * k; }
inline int conflict_color_bound(int k) { return 4 * k * k * k + 2 * k; }
inline int colorful_color_bound(int k) { return 4 * k * k * k + 4 * k + 2; }
inline int marginal_pathwidth_bound(int k) { return 2 * k + 1; }

// Paths in G from one margin vertex of a node to every vertex of its adhesion.
struct PathFamily {
  int node = -1;
  int source = -1;
  std::vector<std::vector<int>> paths;
};

struct RoutingAudit {
  int calls = 0;
  int max_requests = 0;
  // Largest value of requests meeting a component plus load, over all calls and selected nodes.
  int max_budget = 0;
  int max_load = 0;
  int max_marginal_width = -1;
};

struct RoutingResult {
  int k = 0;
  VertexSet selected;
  std::map<int, PathFamily> families;
  // Path decomposition bags of the marginal graph of each selected node in the quotient.
  std::map<int, std::vector<VertexSet>> marginal_paths;
  std::map<int, int> loads;
  RoutingAudit audit;
};

// Selects nodes of a sane decomposition of a connected graph and routes path families so that
// quotient margins have pathwidth at most 2k+1 and every load is at most 2k^3.
RoutingResult route_families(const Graph& g, const TreeDecomposition& t);
// Independent check of every routing condition; empty when all hold.
std::vector<std::string> routing_problems(const Graph& g, const TreeDecomposition& t, const RoutingResult& r);

// Nodes of keep, each absorbing the bags of the nodes whose closest kept ancestor it is.
TreeDecomposition quotient(const TreeDecomposition& t, const VertexSet& keep);

struct ConflictReport {
  int pairs = 0;
  int max_back_degree = 0;
  int colors = 0;
};

// Adhesion-capturing certificate from the path families of a quotient decomposition.
Certificate conflict_guidance(const Graph& g, const TreeDecomposition& quotient_t,
                              const std::map<int, PathFamily>& families, int k, ConflictReport* report = nullptr);

struct LowPathwidthResult {
  int k = 0;
  TreeDecomposition main;
  Certificate adhesion_certificate;
  std::map<int, TreeDecomposition> marginal_paths;
  RoutingAudit audit;
  ConflictReport conflicts;
};

// Per component: optimal decomposition, sanitize, route, quotient, conflict coloring.
LowPathwidthResult low_pw_decomp(const Graph& g);
// Same, starting from a supplied decomposition instead of the oracle.
LowPathwidthResult low_pw_decomp(const Graph& g, const TreeDecomposition& t);

struct NestedTreeDecomposition {
  TreeDecomposition main;
  std::map<int, TreeDecomposition> marginal;
};

NestedTreeDecomposition build_nested(const Graph& g, const TreeDecomposition& main,
                                     const std::map<int, TreeDecomposition>& marginal);
// Largest marginal width plus largest main adhesion.
int nested_width(const NestedTreeDecomposition& n);
TreeDecomposition flatten(const NestedTreeDecomposition& n);

// Greedy coloring of g with the adhesions of t made cliques, in top-down order of the given
// decomposition of that graph; every adhesion of t is rainbow.
std::map<int, int> colorful_coloring(const Graph& g, const TreeDecomposition& t, const TreeDecomposition& order);
std::vector<std::string> colorful_problems(const Graph& g, const TreeDecomposition& t, const std::map<int, int>& color);

struct PipelineReport {
  int k = -1;
  int main_nodes = 0;
  int max_adhesion = 0;
  int max_marginal_pathwidth = -1;
  int max_marginal_width = -1;
  int max_semigroup = 0;
  bool budgets_ok = true;
  int nested_width = -1;
  int flattened_width = -1;
  int final_width = -1;
  int width_bound = -1;
  int colorful_colors = 0;
  RoutingAudit audit;
  ConflictReport conflicts;
};

struct PipelineResult {
  TreeDecomposition decomposition;
  Certificate adhesion_certificate;
  PipelineReport report;
};

// Optimal decomposition per component, then nesting of certified marginal decompositions.
TreeDecomposition oracle_forest(const Graph& g);
PipelineResult full_pipeline(const Graph& g);
// Same, starting from a supplied decomposition instead of the oracle.
PipelineResult full_pipeline(const Graph& g, const TreeDecomposition& t);

}  // namespace guidepost
