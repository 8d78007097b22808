#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"

namespace guidepost {

// In-tree given by its root and child-to-parent arcs.
struct GuidedTree {
  int root = -1;
  std::vector<Edge> arcs;

  VertexSet vertices() const;
  bool operator==(const GuidedTree& other) const { return root == other.root && arcs == other.arcs; }
};

struct GuidanceSystem {
  std::vector<GuidedTree> trees;
};

struct TreeColoring {
  std::vector<int> color;
  int color_count() const;
};

enum class CapturedFamily { Bags, Adhesions };

struct Certificate {
  Graph graph;
  TreeDecomposition decomposition;
  GuidanceSystem guidance;
  TreeColoring coloring;
  CapturedFamily captured = CapturedFamily::Bags;

  int colors() const { return coloring.color_count(); }
};

// BFS spanning tree of the component of root inside G[within], neighbors in ascending order.
GuidedTree bfs_tree(const Graph& g, int root, const VertexSet& within);
GuidedTree bfs_tree(const Graph& g, int root);

// Problems with the trees themselves: broken in-trees or arcs that are not host edges.
std::vector<std::string> validate_guidance(const Graph& g, const GuidanceSystem& system);

// Roots of all trees containing u.
VertexSet reachable_roots(const Graph& g, const GuidanceSystem& system, int u);
// Reachable roots of every host vertex.
std::map<int, VertexSet> reachable_roots_all(const Graph& g, const GuidanceSystem& system);

struct CaptureResult {
  // Capturing vertex per set; -1 for an empty set.
  std::vector<int> witness;
  // Index of the first set with no capturing vertex, or -1.
  int failed = -1;
  bool ok() const { return failed < 0; }
};

CaptureResult captures(const Graph& g, const GuidanceSystem& system, const std::vector<VertexSet>& family);
std::vector<VertexSet> captured_sets(const TreeDecomposition& t, CapturedFamily family);

// First pair of same-colored trees that share a vertex.
std::optional<Edge> coloring_clash(const GuidanceSystem& system, const TreeColoring& coloring);
// Smallest free color per tree in the given order (default: index order).
TreeColoring greedy_coloring(const GuidanceSystem& system, const std::vector<int>& order = {});
// Colors renumbered 0..c-1 by first appearance.
TreeColoring compact_coloring(const TreeColoring& coloring);

struct CertificateReport {
  ValidationReport decomposition;
  std::vector<std::string> tree_problems;
  int uncaptured = -1;
  std::optional<Edge> clash;
  bool graph_mismatch = false;

  bool ok() const {
    return decomposition.ok() && tree_problems.empty() && uncaptured < 0 && !clash && !graph_mismatch;
  }
  std::string describe() const;
};

CertificateReport verify_certificate(const Certificate& c);
// Throws an InvariantError naming the failing stage.
void ensure_certificate(const Certificate& c, const std::string& stage);

// Vertex ids rewritten through the map; unmapped vertices keep their ids.
Certificate relabel(const Certificate& c, const std::map<int, int>& rename);
// Certificate restricted to a union of components of its host graph.
Certificate restrict_certificate(const Certificate& c, const VertexSet& keep);

Certificate cert_remove_vertex(const Certificate& c, int u);
Certificate cert_add_vertex(const Certificate& c, const Graph& g, int u);
Certificate cert_disjoint_union(const Certificate& a, const Certificate& b);
Certificate leaf_certificate(const Graph& g);
Certificate cycle_certificate(int n);

}  // namespace guidepost
