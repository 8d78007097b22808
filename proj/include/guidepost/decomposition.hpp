#pragma once

#include <map>
#include <string>
#include <vector>

#include "guidepost/graph.hpp"

namespace guidepost {

// In-forest of nodes with a bag per node; -1 marks "no parent".
class TreeDecomposition {
 public:
  void add_node(int id, VertexSet bag, int parent = -1);
  void remove_node(int id);
  void set_parent(int id, int parent);
  void set_bag(int id, VertexSet bag);

  bool has_node(int id) const { return bags_.count(id) > 0; }
  const VertexSet& bag(int id) const;
  int parent(int id) const;
  std::vector<int> nodes() const;
  std::vector<int> children(int id) const;
  std::vector<int> roots() const;
  std::size_t size() const { return bags_.size(); }
  bool empty() const { return bags_.empty(); }
  int max_node_id() const { return bags_.empty() ? -1 : bags_.rbegin()->first; }
  const std::map<int, VertexSet>& bags() const { return bags_; }

  // Subtree of x in preorder, children visited in ascending id.
  std::vector<int> subtree(int x) const;
  // All nodes in preorder, roots in ascending id.
  std::vector<int> preorder() const;
  // Strict ancestors of x, nearest first.
  std::vector<int> ancestors(int x) const;
  bool is_ancestor_or_self(int ancestor, int x) const;
  int depth(int x) const;
  bool is_path_forest() const;
  bool parent_relation_acyclic() const;

  bool operator==(const TreeDecomposition& other) const {
    return bags_ == other.bags_ && parent_ == other.parent_;
  }

 private:
  std::map<int, VertexSet> bags_;
  std::map<int, int> parent_;
  std::map<int, VertexSet> children_;
};

struct NodeView {
  VertexSet adhesion;
  VertexSet margin;
  VertexSet cone;
  VertexSet component;
};

NodeView node_view(const TreeDecomposition& t, int x);
VertexSet adhesion(const TreeDecomposition& t, int x);
VertexSet cone(const TreeDecomposition& t, int x);
// Union of all bags.
VertexSet covered_vertices(const TreeDecomposition& t);

struct ValidationReport {
  std::vector<Edge> uncovered_edges;
  VertexSet uncovered_vertices;
  VertexSet disconnected_vertices;
  VertexSet unknown_vertices;
  bool forest_broken = false;

  bool ok() const {
    return uncovered_edges.empty() && uncovered_vertices.empty() && disconnected_vertices.empty() &&
           unknown_vertices.empty() && !forest_broken;
  }
  std::string describe() const;
};

ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& t);
void require_valid(const Graph& g, const TreeDecomposition& t, const std::string& what);
int width(const TreeDecomposition& t);

struct SaneViolation {
  int node;
  char condition;  // 'a' empty margin, 'b' disconnected cone or component, 'c' adhesion vertex without neighbor
  int vertex = -1;
  std::string describe() const;
};

std::vector<SaneViolation> is_sane(const Graph& g, const TreeDecomposition& t);
TreeDecomposition sanitize(const Graph& g, const TreeDecomposition& t);

Graph marginal_graph(const Graph& g, const TreeDecomposition& t, int x);
// Nodes of the subtree of z that are not in the ancestor-closed set zs but whose parent is.
std::vector<int> boundary(const TreeDecomposition& t, const std::vector<int>& zs);
Hypergraph hypertorso(const Graph& g, const TreeDecomposition& t, const std::vector<int>& zs);

// One tree per connected component: for component C the nodes whose bag meets C, bags cut down to C.
// Node ids are renumbered from 0 in component order, then preorder.
TreeDecomposition split_by_components(const Graph& g, const TreeDecomposition& t);
// Decomposition with every bag intersected with keep; nodes with empty bags are contracted away.
TreeDecomposition restrict_to(const TreeDecomposition& t, const VertexSet& keep);
// Same forest with node ids 0..n-1 in preorder.
TreeDecomposition renumber(const TreeDecomposition& t);
// Chain decomposition: node i has parent i-1.
TreeDecomposition path_from_bags(const std::vector<VertexSet>& bags);
// Bags of a path forest, each path read from its root, paths in ascending root id.
std::vector<VertexSet> bag_sequence(const TreeDecomposition& p);
// Contract nodes whose bag equals the parent's bag.
TreeDecomposition contract_equal_neighbors(const TreeDecomposition& t);
// Contract every node whose bag is contained in a neighbor's bag; the width is unchanged.
TreeDecomposition drop_redundant_bags(const TreeDecomposition& t);

}  // namespace guidepost
