#include "guidepost/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "guidepost/error.hpp"

namespace guidepost {

namespace vset {

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

VertexSet make(std::vector<int> items) {
  normalize(items);
  return items;
}

bool contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

void insert(VertexSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

void erase(VertexSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace vset

namespace {
const VertexSet kEmpty;
}

Graph::Graph(const VertexSet& vertices) {
  for (int v : vertices) add_vertex(v);
}

Graph::Graph(const VertexSet& vertices, const std::vector<Edge>& edges) : Graph(vertices) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_vertex(int v) {
  require(v >= 0, "vertex ids must be non-negative");
  if (adjacency_.emplace(v, VertexSet{}).second) vset::insert(vertices_, v);
}

void Graph::add_edge(int u, int v) {
  require(u != v, "self-loop on vertex " + std::to_string(u));
  require(has_vertex(u) && has_vertex(v),
          "edge {" + std::to_string(u) + "," + std::to_string(v) + "} uses an unknown vertex");
  vset::insert(adjacency_[u], v);
  vset::insert(adjacency_[v], u);
}

void Graph::remove_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) return;
  vset::erase(adjacency_[u], v);
  vset::erase(adjacency_[v], u);
}

void Graph::remove_vertex(int v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) return;
  for (int w : it->second) vset::erase(adjacency_[w], v);
  adjacency_.erase(it);
  vset::erase(vertices_, v);
}

bool Graph::has_vertex(int v) const { return adjacency_.count(v) > 0; }

const VertexSet& Graph::neighbors(int v) const {
  auto it = adjacency_.find(v);
  return it == adjacency_.end() ? kEmpty : it->second;
}

bool Graph::adjacent(int u, int v) const { return vset::contains(neighbors(u), v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [u, nb] : adjacency_)
    for (int v : nb)
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [u, nb] : adjacency_) twice += nb.size();
  return twice / 2;
}

Graph Graph::induced(const VertexSet& s) const {
  Graph g;
  for (int v : s)
    if (has_vertex(v)) g.add_vertex(v);
  for (int u : g.vertices_) {
    VertexSet nb = vset::intersect(neighbors(u), g.vertices_);
    g.adjacency_[u] = std::move(nb);
  }
  return g;
}

Graph Graph::without(int v) const {
  Graph g = *this;
  g.remove_vertex(v);
  return g;
}

Graph Graph::without(const VertexSet& s) const { return induced(vset::minus(vertices_, s)); }

VertexSet Graph::reach_within(int v, const VertexSet& s) const {
  VertexSet seen{v};
  std::deque<int> queue{v};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : neighbors(x)) {
      if (!vset::contains(s, y) || vset::contains(seen, y)) continue;
      vset::insert(seen, y);
      queue.push_back(y);
    }
  }
  return seen;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet done;
  for (int v : vertices_) {
    if (vset::contains(done, v)) continue;
    VertexSet c = reach_within(v, vertices_);
    done = vset::unite(done, c);
    out.push_back(std::move(c));
  }
  return out;
}

VertexSet Graph::component_of(int v) const { return reach_within(v, vertices_); }

bool Graph::connected() const { return connected_within(vertices_); }

bool Graph::connected_within(const VertexSet& s) const {
  if (s.empty()) return true;
  return reach_within(s.front(), s).size() == s.size();
}

std::vector<int> Graph::shortest_path(int from, int to, const VertexSet& allowed) const {
  std::map<int, int> pred{{from, from}};
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (int y : neighbors(x)) {
      if (!vset::contains(allowed, y) || pred.count(y)) continue;
      pred[y] = x;
      queue.push_back(y);
    }
  }
  if (!pred.count(to)) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(pred[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool Graph::operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

Graph with_cliques(const Graph& g, const std::vector<VertexSet>& sets) {
  Graph out = g;
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) out.add_edge(s[i], s[j]);
  return out;
}

Graph Hypergraph::primal() const {
  Graph g(vertices);
  for (const auto& e : edges) {
    for (int v : e.vertices) require(vset::contains(vertices, v), "hyperedge uses an unknown vertex");
  }
  std::vector<VertexSet> sets;
  for (const auto& e : edges) sets.push_back(e.vertices);
  return with_cliques(g, sets);
}

bool Hypergraph::connected() const { return primal().connected(); }

int Hypergraph::max_edge_size() const {
  int best = 0;
  for (const auto& e : edges) best = std::max(best, static_cast<int>(e.vertices.size()));
  return best;
}

}  // namespace guidepost
