#include "guidepost/adhesion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

Edge ordered(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct UnionFind {
  std::map<int, int> parent;
  int find(int v) {
    auto it = parent.find(v);
    if (it == parent.end()) return parent[v] = v;
    if (it->second == v) return v;
    return it->second = find(it->second);
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

AdhesionEncoding build(const Graph& g, const TreeDecomposition& t) {
  Graph h = clique_adhesions(g, t);
  AdhesionEncoding out;
  for (int x : t.preorder()) {
    VertexSet margin = vset::minus(t.bag(x), adhesion(t, x));
    require(!margin.empty(), "node " + std::to_string(x) + " has an empty margin");
    VertexSet seen{margin.front()};
    std::deque<int> queue{margin.front()};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : h.neighbors(v))
        if (vset::contains(margin, w) && !vset::contains(seen, w)) {
          vset::insert(seen, w);
          out.margin_edges.push_back(ordered(v, w));
          queue.push_back(w);
        }
    }
    require(seen == margin, "margin of node " + std::to_string(x) + " is disconnected");
    int p = t.parent(x);
    if (p < 0) {
      vset::insert(out.roots, margin.front());
      continue;
    }
    VertexSet up = vset::intersect(adhesion(t, x), vset::minus(t.bag(p), adhesion(t, p)));
    require(!up.empty(), "adhesion of node " + std::to_string(x) + " misses the parent margin");
    int a = up.front();
    VertexSet down = vset::intersect(h.neighbors(a), margin);
    require(!down.empty(), "vertex " + std::to_string(a) + " has no neighbor in the margin of node " + std::to_string(x));
    out.connectors.push_back(ordered(a, down.front()));
  }
  std::sort(out.margin_edges.begin(), out.margin_edges.end());
  std::sort(out.connectors.begin(), out.connectors.end());
  return out;
}

}  // namespace

Graph clique_adhesions(const Graph& g, const TreeDecomposition& t) {
  std::vector<VertexSet> seps;
  for (int x : t.nodes()) seps.push_back(adhesion(t, x));
  return with_cliques(g, seps);
}

AdhesionEncoding encode(const Graph& g, const TreeDecomposition& t) {
  require_valid(g, t, "decomposition");
  auto violations = is_sane(g, t);
  require(violations.empty(), "decomposition is not sane: " + (violations.empty() ? std::string() : violations.front().describe()));
  return build(g, t);
}

AdhesionEncoding encode_unchecked(const Graph& g, const TreeDecomposition& t) {
  require_valid(g, t, "decomposition");
  return build(g, t);
}

std::vector<std::string> encoding_problems(const Graph& h, const AdhesionEncoding& e) {
  std::vector<std::string> out;
  std::set<Edge> margin(e.margin_edges.begin(), e.margin_edges.end());
  UnionFind forest;
  for (const auto* list : {&e.margin_edges, &e.connectors})
    for (auto [u, v] : *list) {
      std::string name = "edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
      if (!h.has_vertex(u) || !h.has_vertex(v) || !h.adjacent(u, v)) out.push_back(name + " is not in the graph");
      if (list == &e.connectors && margin.count(ordered(u, v))) out.push_back(name + " is both a margin edge and a connector");
      if (!forest.join(u, v)) out.push_back(name + " closes a cycle");
    }
  for (int v : e.roots)
    if (!h.has_vertex(v)) out.push_back("root representative " + std::to_string(v) + " is not a vertex");
  for (const auto& comp : h.components()) {
    int reps = 0;
    for (int v : e.roots)
      if (vset::contains(comp, v)) ++reps;
    if (reps != 1) out.push_back("component of " + std::to_string(comp.front()) + " has " + std::to_string(reps) + " root representatives");
    for (int v : comp)
      if (forest.find(v) != forest.find(comp.front())) {
        out.push_back("margin edges and connectors do not span the component of " + std::to_string(comp.front()));
        break;
      }
  }
  return out;
}

TreeDecomposition decode(const Graph& h, const AdhesionEncoding& e) {
  auto problems = encoding_problems(h, e);
  require(problems.empty(), "invalid encoding: " + (problems.empty() ? std::string() : problems.front()));
  Graph margins(h.vertices(), e.margin_edges);
  std::vector<VertexSet> parts = margins.components();
  std::map<int, int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) part_of[v] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(parts.size());
  for (auto [u, v] : e.connectors) {
    adj[part_of.at(u)].push_back(part_of.at(v));
    adj[part_of.at(v)].push_back(part_of.at(u));
  }
  for (auto& a : adj)
    std::sort(a.begin(), a.end(), [&](int x, int y) { return parts[x].front() < parts[y].front(); });

  std::vector<int> parent(parts.size(), -2);
  std::vector<int> order;
  for (int r : e.roots) {
    int start = part_of.at(r);
    parent[start] = -1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (auto it = adj[x].rbegin(); it != adj[x].rend(); ++it)
        if (parent[*it] == -2) {
          parent[*it] = x;
          stack.push_back(*it);
        }
    }
  }
  std::vector<VertexSet> below(parts.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it] = vset::unite(below[*it], parts[*it]);
    if (parent[*it] >= 0) below[parent[*it]] = vset::unite(below[parent[*it]], below[*it]);
  }
  std::map<int, int> id;
  TreeDecomposition out;
  for (int x : order) {
    VertexSet bag = parts[x];
    for (int v : below[x])
      for (int w : h.neighbors(v))
        if (!vset::contains(below[x], w)) vset::insert(bag, w);
    int node = static_cast<int>(id.size());
    id[x] = node;
    out.add_node(node, bag, parent[x] < 0 ? -1 : id.at(parent[x]));
  }
  return out;
}

bool same_up_to_ids(const TreeDecomposition& a, const TreeDecomposition& b) {
  auto signature = [](const TreeDecomposition& t) {
    std::vector<std::tuple<VertexSet, VertexSet, VertexSet>> sig;
    for (int x : t.nodes()) {
      VertexSet margin = vset::minus(t.bag(x), adhesion(t, x));
      int p = t.parent(x);
      VertexSet up = p < 0 ? VertexSet{} : vset::minus(t.bag(p), adhesion(t, p));
      sig.emplace_back(margin, t.bag(x), up);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  return signature(a) == signature(b);
}

}  // namespace guidepost
