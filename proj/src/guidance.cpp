#include "guidepost/guidance.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "guidepost/error.hpp"

namespace guidepost {

VertexSet GuidedTree::vertices() const {
  VertexSet out{root};
  for (auto [a, b] : arcs) {
    out.push_back(a);
    out.push_back(b);
  }
  vset::normalize(out);
  return out;
}

int TreeColoring::color_count() const {
  std::set<int> used(color.begin(), color.end());
  return static_cast<int>(used.size());
}

GuidedTree bfs_tree(const Graph& g, int root, const VertexSet& within) {
  require(g.has_vertex(root), "tree root " + std::to_string(root) + " is not a host vertex");
  GuidedTree t;
  t.root = root;
  VertexSet seen{root};
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (!vset::contains(within, y) || vset::contains(seen, y)) continue;
      vset::insert(seen, y);
      t.arcs.emplace_back(y, x);
      queue.push_back(y);
    }
  }
  std::sort(t.arcs.begin(), t.arcs.end());
  return t;
}

GuidedTree bfs_tree(const Graph& g, int root) { return bfs_tree(g, root, g.vertices()); }

std::vector<std::string> validate_guidance(const Graph& g, const GuidanceSystem& system) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < system.trees.size(); ++i) {
    const auto& t = system.trees[i];
    std::string name = "tree " + std::to_string(i) + ": ";
    if (!g.has_vertex(t.root)) {
      problems.push_back(name + "root is not a host vertex");
      continue;
    }
    std::map<int, int> out;
    bool ok = true;
    for (auto [a, b] : t.arcs) {
      if (!g.adjacent(a, b)) {
        problems.push_back(name + "arc (" + std::to_string(a) + "," + std::to_string(b) + ") is not a host edge");
        ok = false;
      }
      if (a == t.root) {
        problems.push_back(name + "root has an outgoing arc");
        ok = false;
      }
      if (!out.emplace(a, b).second) {
        problems.push_back(name + "vertex " + std::to_string(a) + " has two outgoing arcs");
        ok = false;
      }
    }
    if (!ok) continue;
    for (auto [a, b] : out) {
      std::set<int> seen{a};
      int x = a;
      while (x != t.root) {
        auto it = out.find(x);
        if (it == out.end() || !seen.insert(it->second).second) {
          problems.push_back(name + "vertex " + std::to_string(a) + " does not lead to the root");
          break;
        }
        x = it->second;
      }
    }
  }
  return problems;
}

std::map<int, VertexSet> reachable_roots_all(const Graph& g, const GuidanceSystem& system) {
  std::map<int, VertexSet> out;
  for (int v : g.vertices()) out[v];
  for (const auto& t : system.trees)
    for (int v : t.vertices()) vset::insert(out[v], t.root);
  return out;
}

VertexSet reachable_roots(const Graph& g, const GuidanceSystem& system, int u) {
  require(g.has_vertex(u), "unknown vertex " + std::to_string(u));
  VertexSet out;
  for (const auto& t : system.trees)
    if (vset::contains(t.vertices(), u)) vset::insert(out, t.root);
  return out;
}

CaptureResult captures(const Graph& g, const GuidanceSystem& system, const std::vector<VertexSet>& family) {
  auto lambda = reachable_roots_all(g, system);
  CaptureResult r;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& x = family[i];
    if (x.empty()) {
      r.witness.push_back(-1);
      continue;
    }
    int found = -1;
    for (const auto& [u, roots] : lambda)
      if (vset::subset(x, roots)) {
        found = u;
        break;
      }
    if (found < 0) {
      r.failed = static_cast<int>(i);
      return r;
    }
    r.witness.push_back(found);
  }
  return r;
}

std::vector<VertexSet> captured_sets(const TreeDecomposition& t, CapturedFamily family) {
  std::vector<VertexSet> out;
  for (int x : t.nodes()) out.push_back(family == CapturedFamily::Bags ? t.bag(x) : adhesion(t, x));
  return out;
}

std::optional<Edge> coloring_clash(const GuidanceSystem& system, const TreeColoring& coloring) {
  std::map<std::pair<int, int>, int> owner;
  for (std::size_t i = 0; i < system.trees.size(); ++i) {
    int c = i < coloring.color.size() ? coloring.color[i] : -1;
    for (int v : system.trees[i].vertices()) {
      auto [it, fresh] = owner.emplace(std::make_pair(c, v), static_cast<int>(i));
      if (!fresh) return Edge{it->second, static_cast<int>(i)};
    }
  }
  return std::nullopt;
}

namespace {

// Vertices occupied by each color; trees of one color are disjoint.
struct Palette {
  std::vector<VertexSet> occupied;

  int place(const VertexSet& verts, int from = 0) {
    int c = from;
    while (c < static_cast<int>(occupied.size()) && vset::intersects(occupied[c], verts)) ++c;
    if (c == static_cast<int>(occupied.size())) occupied.emplace_back();
    occupied[c] = vset::unite(occupied[c], verts);
    return c;
  }
  void mark(int c, const VertexSet& verts) {
    if (c >= static_cast<int>(occupied.size())) occupied.resize(c + 1);
    occupied[c] = vset::unite(occupied[c], verts);
  }
};

Graph graph_union(const Graph& a, const Graph& b) {
  Graph g = a;
  for (int v : b.vertices()) g.add_vertex(v);
  for (auto [u, v] : b.edges()) g.add_edge(u, v);
  return g;
}

}  // namespace

TreeColoring greedy_coloring(const GuidanceSystem& system, const std::vector<int>& order) {
  std::vector<int> seq = order;
  if (seq.empty())
    for (std::size_t i = 0; i < system.trees.size(); ++i) seq.push_back(static_cast<int>(i));
  require(seq.size() == system.trees.size(), "coloring order must list every tree");
  TreeColoring col;
  col.color.assign(system.trees.size(), -1);
  Palette palette;
  for (int i : seq) col.color.at(i) = palette.place(system.trees[i].vertices());
  return col;
}

TreeColoring compact_coloring(const TreeColoring& coloring) {
  std::map<int, int> rename;
  TreeColoring out;
  for (int c : coloring.color) {
    auto it = rename.find(c);
    if (it == rename.end()) it = rename.emplace(c, static_cast<int>(rename.size())).first;
    out.color.push_back(it->second);
  }
  return out;
}

std::string CertificateReport::describe() const {
  std::ostringstream out;
  if (graph_mismatch) out << "host graph mismatch; ";
  if (!decomposition.ok()) out << decomposition.describe() << "; ";
  for (const auto& p : tree_problems) out << p << "; ";
  if (uncaptured >= 0) out << "set " << uncaptured << " is not captured; ";
  if (clash) out << "trees " << clash->first << " and " << clash->second << " share a color and a vertex; ";
  std::string s = out.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

CertificateReport verify_certificate(const Certificate& c) {
  CertificateReport r;
  r.decomposition = validate_decomposition(c.graph, c.decomposition);
  r.tree_problems = validate_guidance(c.graph, c.guidance);
  r.graph_mismatch = c.coloring.color.size() != c.guidance.trees.size();
  if (!r.decomposition.forest_broken) {
    auto cap = captures(c.graph, c.guidance, captured_sets(c.decomposition, c.captured));
    r.uncaptured = cap.failed;
  }
  if (!r.graph_mismatch) r.clash = coloring_clash(c.guidance, c.coloring);
  return r;
}

void ensure_certificate(const Certificate& c, const std::string& stage) {
  auto r = verify_certificate(c);
  ensure(r.ok(), stage + ": certificate check failed: " + r.describe());
}

Certificate relabel(const Certificate& c, const std::map<int, int>& rename) {
  auto f = [&](int v) {
    auto it = rename.find(v);
    return it == rename.end() ? v : it->second;
  };
  Certificate out;
  out.captured = c.captured;
  out.coloring = c.coloring;
  for (int v : c.graph.vertices()) out.graph.add_vertex(f(v));
  for (auto [u, v] : c.graph.edges()) out.graph.add_edge(f(u), f(v));
  for (int x : c.decomposition.nodes()) {
    VertexSet bag;
    for (int v : c.decomposition.bag(x)) bag.push_back(f(v));
    out.decomposition.add_node(x, bag);
  }
  for (int x : c.decomposition.nodes())
    if (c.decomposition.parent(x) >= 0) out.decomposition.set_parent(x, c.decomposition.parent(x));
  for (const auto& t : c.guidance.trees) {
    GuidedTree n;
    n.root = f(t.root);
    for (auto [a, b] : t.arcs) n.arcs.emplace_back(f(a), f(b));
    std::sort(n.arcs.begin(), n.arcs.end());
    out.guidance.trees.push_back(std::move(n));
  }
  return out;
}

Certificate restrict_certificate(const Certificate& c, const VertexSet& keep) {
  Certificate out;
  out.captured = c.captured;
  out.graph = c.graph.induced(keep);
  out.decomposition = renumber(restrict_to(c.decomposition, keep));
  TreeColoring col;
  for (std::size_t i = 0; i < c.guidance.trees.size(); ++i) {
    if (!vset::contains(keep, c.guidance.trees[i].root)) continue;
    out.guidance.trees.push_back(c.guidance.trees[i]);
    col.color.push_back(c.coloring.color[i]);
  }
  out.coloring = compact_coloring(col);
  return out;
}

Certificate cert_remove_vertex(const Certificate& c, int u) {
  require(c.graph.has_vertex(u), "vertex " + std::to_string(u) + " is not in the certificate host");
  Certificate out;
  out.captured = c.captured;
  out.graph = c.graph.without(u);
  out.decomposition = split_by_components(out.graph, c.decomposition);
  Palette palette;
  std::vector<int> replaced;
  for (std::size_t i = 0; i < c.guidance.trees.size(); ++i) {
    const auto& t = c.guidance.trees[i];
    VertexSet verts = t.vertices();
    if (!vset::contains(verts, u)) {
      out.guidance.trees.push_back(t);
      out.coloring.color.push_back(c.coloring.color[i]);
      palette.mark(c.coloring.color[i], verts);
    } else if (t.root != u) {
      replaced.push_back(static_cast<int>(out.guidance.trees.size()));
      out.guidance.trees.push_back(bfs_tree(out.graph, t.root));
      out.coloring.color.push_back(-1);
    }
  }
  for (int i : replaced) out.coloring.color[i] = palette.place(out.guidance.trees[i].vertices());
  out.coloring = compact_coloring(out.coloring);
  return out;
}

Certificate cert_add_vertex(const Certificate& c, const Graph& g, int u) {
  require(g.has_vertex(u), "vertex " + std::to_string(u) + " is not in the target graph");
  require(c.graph == g.without(u), "certificate host is not the target graph minus the added vertex");
  Certificate out;
  out.captured = c.captured;
  out.graph = g;
  TreeDecomposition t = split_by_components(c.graph, c.decomposition);
  VertexSet home = g.component_of(u);
  int anchor = -1;
  for (int r : t.roots()) {
    if (!vset::intersects(t.bag(r), home)) continue;
    for (int x : t.subtree(r)) {
      VertexSet bag = t.bag(x);
      vset::insert(bag, u);
      t.set_bag(x, std::move(bag));
    }
    if (anchor < 0) anchor = r;
    else t.set_parent(r, anchor);
  }
  if (anchor < 0) t.add_node(t.max_node_id() + 1, {u});
  out.decomposition = std::move(t);
  out.guidance = c.guidance;
  out.coloring = c.coloring;
  Palette palette;
  for (std::size_t i = 0; i < c.guidance.trees.size(); ++i) palette.mark(c.coloring.color[i], c.guidance.trees[i].vertices());
  GuidedTree fresh = bfs_tree(g, u);
  out.coloring.color.push_back(palette.place(fresh.vertices()));
  out.guidance.trees.push_back(std::move(fresh));
  return out;
}

Certificate cert_disjoint_union(const Certificate& a, const Certificate& b) {
  require(!vset::intersects(a.graph.vertices(), b.graph.vertices()), "certificate hosts overlap");
  if (a.graph.empty() && a.decomposition.empty()) return b;
  if (b.graph.empty() && b.decomposition.empty()) return a;
  require(a.captured == b.captured, "certificates capture different families");
  Certificate out = a;
  out.graph = graph_union(a.graph, b.graph);
  int offset = a.decomposition.max_node_id() + 1;
  for (int x : b.decomposition.nodes()) out.decomposition.add_node(x + offset, b.decomposition.bag(x));
  for (int x : b.decomposition.nodes())
    if (b.decomposition.parent(x) >= 0) out.decomposition.set_parent(x + offset, b.decomposition.parent(x) + offset);
  for (std::size_t i = 0; i < b.guidance.trees.size(); ++i) {
    out.guidance.trees.push_back(b.guidance.trees[i]);
    out.coloring.color.push_back(b.coloring.color[i]);
  }
  return out;
}

Certificate leaf_certificate(const Graph& g) {
  Certificate out;
  out.graph = g;
  int id = 0;
  for (const auto& comp : g.components()) {
    out.decomposition.add_node(id++, comp);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      out.guidance.trees.push_back(bfs_tree(g, comp[i]));
      out.coloring.color.push_back(static_cast<int>(i));
    }
  }
  return out;
}

Certificate cycle_certificate(int n) {
  require(n >= 4 && n % 2 == 0, "cycle certificates need an even length of at least 4");
  Certificate out;
  for (int v = 1; v <= n; ++v) out.graph.add_vertex(v);
  for (int v = 1; v <= n; ++v) out.graph.add_edge(v, v % n + 1);
  std::vector<VertexSet> bags;
  for (int u = 2; u <= n - 1; ++u) bags.push_back(vset::make({1, u, u + 1}));
  out.decomposition = path_from_bags(bags);
  GuidedTree around;
  around.root = 1;
  for (int v = 2; v <= n; ++v) around.arcs.emplace_back(v, v % n + 1);
  std::sort(around.arcs.begin(), around.arcs.end());
  out.guidance.trees.push_back(std::move(around));
  out.coloring.color.push_back(0);
  for (int u = 1; u <= n - 1; ++u) {
    GuidedTree step;
    step.root = u + 1;
    step.arcs.emplace_back(u, u + 1);
    out.guidance.trees.push_back(std::move(step));
    out.coloring.color.push_back(u % 2 == 1 ? 1 : 2);
  }
  return out;
}

}  // namespace guidepost
