#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace guidepost {

// Sorted vector of distinct vertex ids.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

namespace vset {
void normalize(VertexSet& s);
VertexSet make(std::vector<int> items);
bool contains(const VertexSet& s, int v);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet minus(const VertexSet& a, const VertexSet& b);
bool subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
void insert(VertexSet& s, int v);
void erase(VertexSet& s, int v);
std::string to_string(const VertexSet& s);
}  // namespace vset

// Simple undirected graph over arbitrary non-negative integer ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const VertexSet& vertices);
  Graph(const VertexSet& vertices, const std::vector<Edge>& edges);

  void add_vertex(int v);
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void remove_vertex(int v);

  const VertexSet& vertices() const { return vertices_; }
  bool has_vertex(int v) const;
  const VertexSet& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  std::vector<Edge> edges() const;
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const;
  bool empty() const { return vertices_.empty(); }
  int max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }

  Graph induced(const VertexSet& s) const;
  Graph without(int v) const;
  Graph without(const VertexSet& s) const;

  // Components sorted by their smallest vertex.
  std::vector<VertexSet> components() const;
  VertexSet component_of(int v) const;
  bool connected() const;
  // Whether G[s] is connected; the empty set counts as connected.
  bool connected_within(const VertexSet& s) const;
  // Vertices of s reachable from v inside G[s].
  VertexSet reach_within(int v, const VertexSet& s) const;
  // Shortest path inside G[allowed] by BFS with ascending neighbor order.
  std::vector<int> shortest_path(int from, int to, const VertexSet& allowed) const;

  bool operator==(const Graph& other) const;
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  VertexSet vertices_;
  std::map<int, VertexSet> adjacency_;
};

// Graph with a clique added on every listed set.
Graph with_cliques(const Graph& g, const std::vector<VertexSet>& sets);

struct Hyperedge {
  VertexSet vertices;
  // -1 for an edge of the underlying graph, otherwise the tree node whose adhesion it is.
  int label = -1;
  bool operator==(const Hyperedge& other) const {
    return vertices == other.vertices && label == other.label;
  }
};

// Hypergraph with a multiset of hyperedges kept in insertion order.
struct Hypergraph {
  VertexSet vertices;
  std::vector<Hyperedge> edges;

  bool connected() const;
  // Vertex graph where two vertices are adjacent when they share a hyperedge.
  Graph primal() const;
  int max_edge_size() const;
};

}  // namespace guidepost
