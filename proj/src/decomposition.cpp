#include "guidepost/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {
const VertexSet kNoChildren;
}

void TreeDecomposition::add_node(int id, VertexSet bag, int parent) {
  require(id >= 0, "node ids must be non-negative");
  require(!has_node(id), "duplicate node id " + std::to_string(id));
  vset::normalize(bag);
  bags_[id] = std::move(bag);
  children_[id];
  if (parent >= 0) set_parent(id, parent);
}

void TreeDecomposition::remove_node(int id) {
  require(has_node(id), "unknown node " + std::to_string(id));
  int p = parent(id);
  for (int c : children(id)) set_parent(c, p);
  if (p >= 0) vset::erase(children_[p], id);
  parent_.erase(id);
  children_.erase(id);
  bags_.erase(id);
}

void TreeDecomposition::set_parent(int id, int parent) {
  require(has_node(id), "unknown node " + std::to_string(id));
  require(parent < 0 || has_node(parent), "unknown parent node " + std::to_string(parent));
  require(parent != id, "node " + std::to_string(id) + " cannot be its own parent");
  auto it = parent_.find(id);
  if (it != parent_.end()) {
    vset::erase(children_[it->second], id);
    parent_.erase(it);
  }
  if (parent >= 0) {
    parent_[id] = parent;
    vset::insert(children_[parent], id);
  }
}

void TreeDecomposition::set_bag(int id, VertexSet bag) {
  require(has_node(id), "unknown node " + std::to_string(id));
  vset::normalize(bag);
  bags_[id] = std::move(bag);
}

const VertexSet& TreeDecomposition::bag(int id) const {
  auto it = bags_.find(id);
  require(it != bags_.end(), "unknown node " + std::to_string(id));
  return it->second;
}

int TreeDecomposition::parent(int id) const {
  require(has_node(id), "unknown node " + std::to_string(id));
  auto it = parent_.find(id);
  return it == parent_.end() ? -1 : it->second;
}

std::vector<int> TreeDecomposition::nodes() const {
  std::vector<int> out;
  out.reserve(bags_.size());
  for (const auto& [id, bag] : bags_) out.push_back(id);
  return out;
}

std::vector<int> TreeDecomposition::children(int id) const {
  auto it = children_.find(id);
  return it == children_.end() ? kNoChildren : it->second;
}

std::vector<int> TreeDecomposition::roots() const {
  std::vector<int> out;
  for (const auto& [id, bag] : bags_)
    if (!parent_.count(id)) out.push_back(id);
  return out;
}

std::vector<int> TreeDecomposition::subtree(int x) const {
  require(has_node(x), "unknown node " + std::to_string(x));
  std::vector<int> out;
  std::vector<int> stack{x};
  std::set<int> seen;
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    if (!seen.insert(y).second) continue;
    out.push_back(y);
    const auto& ch = children_.at(y);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<int> TreeDecomposition::preorder() const {
  std::vector<int> out;
  for (int r : roots()) {
    auto sub = subtree(r);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<int> TreeDecomposition::ancestors(int x) const {
  std::vector<int> out;
  std::set<int> seen{x};
  for (int p = parent(x); p >= 0 && seen.insert(p).second; p = parent(p)) out.push_back(p);
  return out;
}

bool TreeDecomposition::is_ancestor_or_self(int ancestor, int x) const {
  if (ancestor == x) return true;
  auto anc = ancestors(x);
  return std::find(anc.begin(), anc.end(), ancestor) != anc.end();
}

int TreeDecomposition::depth(int x) const { return static_cast<int>(ancestors(x).size()); }

bool TreeDecomposition::is_path_forest() const {
  for (const auto& [id, ch] : children_)
    if (ch.size() > 1) return false;
  return true;
}

bool TreeDecomposition::parent_relation_acyclic() const {
  for (const auto& [id, bag] : bags_) {
    std::set<int> seen{id};
    for (int p = parent(id); p >= 0; p = parent(p))
      if (!seen.insert(p).second) return false;
  }
  return true;
}

VertexSet adhesion(const TreeDecomposition& t, int x) {
  int p = t.parent(x);
  return p < 0 ? VertexSet{} : vset::intersect(t.bag(x), t.bag(p));
}

VertexSet cone(const TreeDecomposition& t, int x) {
  VertexSet out;
  for (int y : t.subtree(x)) out = vset::unite(out, t.bag(y));
  return out;
}

NodeView node_view(const TreeDecomposition& t, int x) {
  NodeView v;
  v.adhesion = adhesion(t, x);
  v.margin = vset::minus(t.bag(x), v.adhesion);
  v.cone = cone(t, x);
  v.component = vset::minus(v.cone, v.adhesion);
  return v;
}

VertexSet covered_vertices(const TreeDecomposition& t) {
  VertexSet out;
  for (const auto& [id, bag] : t.bags()) out = vset::unite(out, bag);
  return out;
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  if (forest_broken) out << "parent relation is not an in-forest; ";
  for (auto [u, v] : uncovered_edges) out << "edge {" << u << "," << v << "} in no bag; ";
  for (int v : uncovered_vertices) out << "vertex " << v << " in no bag; ";
  for (int v : disconnected_vertices) out << "vertex " << v << " has disconnected occurrences; ";
  for (int v : unknown_vertices) out << "bag vertex " << v << " not in graph; ";
  std::string s = out.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& t) {
  ValidationReport r;
  if (!t.parent_relation_acyclic()) {
    r.forest_broken = true;
    return r;
  }
  std::map<int, std::vector<int>> occurrences;
  for (const auto& [id, bag] : t.bags())
    for (int v : bag) {
      if (!g.has_vertex(v)) vset::insert(r.unknown_vertices, v);
      occurrences[v].push_back(id);
    }
  for (int v : g.vertices()) {
    auto it = occurrences.find(v);
    if (it == occurrences.end()) {
      r.uncovered_vertices.push_back(v);
      continue;
    }
    // Occurrence nodes are connected iff exactly one of them lacks a parent inside the set.
    const auto& occ = it->second;
    int tops = 0;
    for (int x : occ) {
      int p = t.parent(x);
      if (p < 0 || !vset::contains(t.bag(p), v)) ++tops;
    }
    if (tops != 1) r.disconnected_vertices.push_back(v);
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    auto it = occurrences.find(u);
    if (it != occurrences.end())
      for (int x : it->second)
        if (vset::contains(t.bag(x), v)) {
          covered = true;
          break;
        }
    if (!covered) r.uncovered_edges.emplace_back(u, v);
  }
  return r;
}

void require_valid(const Graph& g, const TreeDecomposition& t, const std::string& what) {
  auto r = validate_decomposition(g, t);
  if (!r.ok()) throw PreconditionError(what + " is not a valid tree decomposition: " + r.describe());
}

int width(const TreeDecomposition& t) {
  int w = -1;
  for (const auto& [id, bag] : t.bags()) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::string SaneViolation::describe() const {
  std::ostringstream out;
  out << "node " << node << ": ";
  switch (condition) {
    case 'a': out << "empty margin"; break;
    case 'b': out << "disconnected component"; break;
    default: out << "adhesion vertex " << vertex << " has no neighbor in the component"; break;
  }
  return out.str();
}

namespace {

// Cones of all nodes computed bottom-up in one pass.
std::map<int, VertexSet> all_cones(const TreeDecomposition& t) {
  std::map<int, VertexSet> cones;
  auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexSet c = t.bag(*it);
    for (int ch : t.children(*it)) c = vset::unite(c, cones[ch]);
    cones[*it] = std::move(c);
  }
  return cones;
}

struct Repair {
  int node = -1;
  char rule = 0;
  int vertex = -1;
};

Repair find_repair(const Graph& g, const TreeDecomposition& t) {
  auto cones = all_cones(t);
  for (int x : t.nodes()) {
    VertexSet sigma = adhesion(t, x);
    if (vset::subset(t.bag(x), sigma)) return {x, 'a'};
    VertexSet comp = vset::minus(cones[x], sigma);
    if (!g.connected_within(comp)) return {x, 'b'};
    for (int u : sigma) {
      if (!vset::intersects(g.neighbors(u), comp)) return {x, 'c', u};
    }
  }
  return {};
}

}  // namespace

std::vector<SaneViolation> is_sane(const Graph& g, const TreeDecomposition& t) {
  require_valid(g, t, "input");
  std::vector<SaneViolation> out;
  auto cones = all_cones(t);
  for (int x : t.nodes()) {
    VertexSet sigma = adhesion(t, x);
    if (vset::subset(t.bag(x), sigma)) out.push_back({x, 'a'});
    VertexSet comp = vset::minus(cones[x], sigma);
    if (!g.connected_within(comp) || !g.connected_within(cones[x])) out.push_back({x, 'b'});
    for (int u : sigma)
      if (!vset::intersects(g.neighbors(u), comp)) out.push_back({x, 'c', u});
  }
  return out;
}

TreeDecomposition sanitize(const Graph& g, const TreeDecomposition& input) {
  require_valid(g, input, "input");
  TreeDecomposition t = input;
  for (;;) {
    Repair r = find_repair(g, t);
    if (r.node < 0) break;
    int x = r.node;
    if (r.rule == 'a') {
      t.remove_node(x);
    } else if (r.rule == 'b') {
      VertexSet sigma = adhesion(t, x);
      VertexSet comp = vset::minus(cone(t, x), sigma);
      VertexSet a = g.reach_within(comp.front(), comp);
      VertexSet b = vset::minus(comp, a);
      VertexSet keep_a = vset::unite(a, sigma);
      VertexSet keep_b = vset::unite(b, sigma);
      int next = t.max_node_id() + 1;
      std::map<int, int> copy;
      for (int y : t.subtree(x)) {
        int p = y == x ? t.parent(x) : copy.at(t.parent(y));
        VertexSet bag_b = vset::intersect(t.bag(y), keep_b);
        t.set_bag(y, vset::intersect(t.bag(y), keep_a));
        copy[y] = next;
        t.add_node(next++, std::move(bag_b), p);
      }
    } else {
      for (int y : t.subtree(x)) {
        VertexSet bag = t.bag(y);
        vset::erase(bag, r.vertex);
        t.set_bag(y, std::move(bag));
      }
    }
  }
  return t;
}

Graph marginal_graph(const Graph& g, const TreeDecomposition& t, int x) {
  NodeView v = node_view(t, x);
  Graph m = g.induced(v.margin);
  std::vector<VertexSet> cliques;
  for (int y : t.children(x)) cliques.push_back(vset::intersect(adhesion(t, y), v.margin));
  return with_cliques(m, cliques);
}

std::vector<int> boundary(const TreeDecomposition& t, const std::vector<int>& zs) {
  VertexSet z = vset::make(zs);
  VertexSet out;
  for (int x : z)
    for (int c : t.children(x))
      if (!vset::contains(z, c)) vset::insert(out, c);
  return out;
}

Hypergraph hypertorso(const Graph& g, const TreeDecomposition& t, const std::vector<int>& zs) {
  require(!zs.empty(), "hypertorso needs a nonempty node set");
  VertexSet z = vset::make(zs);
  int tops = 0;
  for (int x : z) {
    require(t.has_node(x), "unknown node " + std::to_string(x));
    int p = t.parent(x);
    if (p < 0 || !vset::contains(z, p)) ++tops;
  }
  require(tops == 1, "node set is not a prefix of a single subtree");
  Hypergraph h;
  for (int x : z) h.vertices = vset::unite(h.vertices, t.bag(x));
  for (auto [u, v] : g.induced(h.vertices).edges()) h.edges.push_back({{u, v}, -1});
  for (int y : boundary(t, zs)) {
    VertexSet s = adhesion(t, y);
    if (!s.empty()) h.edges.push_back({s, y});
  }
  return h;
}

TreeDecomposition split_by_components(const Graph& g, const TreeDecomposition& t) {
  TreeDecomposition out;
  int next = 0;
  auto order = t.preorder();
  for (const auto& c : g.components()) {
    std::map<int, int> ids;
    for (int x : order) {
      VertexSet bag = vset::intersect(t.bag(x), c);
      if (bag.empty()) continue;
      int p = t.parent(x);
      auto it = ids.find(p);
      ids[x] = next;
      out.add_node(next++, std::move(bag), it == ids.end() ? -1 : it->second);
    }
  }
  return out;
}

TreeDecomposition restrict_to(const TreeDecomposition& t, const VertexSet& keep) {
  TreeDecomposition out = t;
  for (int x : t.nodes()) out.set_bag(x, vset::intersect(t.bag(x), keep));
  for (int x : t.nodes())
    if (out.bag(x).empty()) out.remove_node(x);
  return out;
}

TreeDecomposition renumber(const TreeDecomposition& t) {
  TreeDecomposition out;
  std::map<int, int> ids;
  int next = 0;
  for (int x : t.preorder()) {
    int p = t.parent(x);
    ids[x] = next;
    out.add_node(next++, t.bag(x), p < 0 ? -1 : ids.at(p));
  }
  return out;
}

TreeDecomposition path_from_bags(const std::vector<VertexSet>& bags) {
  TreeDecomposition out;
  for (std::size_t i = 0; i < bags.size(); ++i)
    out.add_node(static_cast<int>(i), bags[i], i == 0 ? -1 : static_cast<int>(i) - 1);
  return out;
}

std::vector<VertexSet> bag_sequence(const TreeDecomposition& p) {
  require(p.is_path_forest(), "decomposition is not a path decomposition");
  std::vector<VertexSet> out;
  for (int x : p.preorder()) out.push_back(p.bag(x));
  return out;
}

TreeDecomposition contract_equal_neighbors(const TreeDecomposition& t) {
  TreeDecomposition out = t;
  for (int x : t.preorder()) {
    int p = out.parent(x);
    if (p >= 0 && out.bag(p) == out.bag(x)) out.remove_node(x);
  }
  return out;
}

TreeDecomposition drop_redundant_bags(const TreeDecomposition& t) {
  TreeDecomposition out = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : out.preorder()) {
      int p = out.parent(x);
      if (p >= 0 && vset::subset(out.bag(x), out.bag(p))) {
        out.remove_node(x);
        changed = true;
        break;
      }
      for (int c : out.children(x))
        if (vset::subset(out.bag(x), out.bag(c))) {
          out.set_bag(x, out.bag(c));
          out.remove_node(c);
          changed = true;
          break;
        }
      if (changed) break;
    }
  }
  return out;
}

}  // namespace guidepost
