#include "guidepost/treewidth.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "guidepost/error.hpp"
#include "guidepost/networks.hpp"
#include "guidepost/oracles.hpp"
#include "guidepost/pathwidth.hpp"

namespace guidepost {

namespace {

// Path in a hypertorso: labels[j] is -1 for a graph edge or the node whose adhesion joins
// vertices[j] and vertices[j+1].
struct LabelPath {
  std::vector<int> vertices;
  std::vector<int> labels;
};

bool meets(const std::vector<int>& path, const VertexSet& s) {
  for (int v : path)
    if (vset::contains(s, v)) return true;
  return false;
}

int bags_width(const std::vector<VertexSet>& bags) {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

// BFS route in h from one vertex to another whose inner vertices avoid the given set.
LabelPath route(const Hypergraph& h, int from, int to, const VertexSet& avoid) {
  if (from == to) return {{from}, {}};
  std::map<int, std::pair<int, int>> prev;
  prev[from] = {-1, -1};
  std::deque<int> queue{from};
  while (!queue.empty() && !prev.count(to)) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      const VertexSet& ev = h.edges[e].vertices;
      if (!vset::contains(ev, x)) continue;
      for (int y : ev) {
        if (prev.count(y) || (y != to && vset::contains(avoid, y))) continue;
        prev[y] = {x, static_cast<int>(e)};
        queue.push_back(y);
      }
    }
  }
  ensure(prev.count(to) > 0, "no route from " + std::to_string(from) + " to " + std::to_string(to) +
                                 " avoiding the adhesion");
  LabelPath p;
  for (int y = to; y != from; y = prev[y].first) {
    p.vertices.push_back(y);
    p.labels.push_back(h.edges[prev[y].second].label);
  }
  p.vertices.push_back(from);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.labels.begin(), p.labels.end());
  return p;
}

class Router {
 public:
  Router(const Graph& g, const TreeDecomposition& t, RoutingResult& out) : g_(g), t_(t), out_(out) {
    for (int x : t.nodes()) views_[x] = node_view(t, x);
  }

  std::vector<std::vector<int>> run(int x0, const std::vector<std::pair<int, int>>& requests) {
    RoutingAudit& audit = out_.audit;
    ++audit.calls;
    int k = out_.k;
    int size = static_cast<int>(requests.size());
    audit.max_requests = std::max(audit.max_requests, size);
    ensure(size <= load_bound(k), "node " + std::to_string(x0) + " received too many requests");
    const NodeView& view = views_.at(x0);
    const VertexSet& sep = view.adhesion;

    std::map<std::pair<int, int>, int> frequency;
    for (const auto& r : requests) ++frequency[r];
    std::pair<int, int> chosen{-1, -1};
    int best = 0;
    for (const auto& [pair, count] : frequency)
      if (count > best) {
        best = count;
        chosen = pair;
      }

    std::vector<int> prefix{x0};
    LabelPath first, second;
    std::vector<VertexSet> local_path;
    if (!requests.empty()) {
      auto [u, v] = chosen;
      VertexSet drop = vset::minus(sep, vset::make({u, v}));
      TreeDecomposition trimmed;
      for (int y : t_.subtree(x0)) trimmed.add_node(y, vset::minus(t_.bag(y), drop), y == x0 ? -1 : t_.parent(y));
      Graph inner = g_.induced(vset::minus(view.cone, drop));
      LocalDecomposition ld = local_decomp(inner, trimmed, u, v);
      prefix = ld.prefix;
      for (auto [hp, lp] : {std::pair{&ld.first, &first}, std::pair{&ld.second, &second}}) {
        lp->vertices = hp->vertices;
        for (int e : hp->edges) lp->labels.push_back(ld.torso.edges[e].label);
      }
      local_path = ld.path;
    }

    Hypergraph torso = hypertorso(g_, t_, prefix);
    std::vector<LabelPath> routes;
    int in_first = 0, first_share = (best + 1) / 2;
    for (const auto& r : requests) {
      if (r == chosen) {
        routes.push_back(in_first++ < first_share ? first : second);
      } else {
        routes.push_back(route(torso, r.first, r.second, sep));
      }
    }
    int w = view.margin.front();
    for (int a : sep) routes.push_back(route(torso, w, a, sep));

    VertexSet selected_before = out_.selected;
    std::map<int, std::vector<std::vector<int>>> sub_paths;
    std::map<int, std::vector<int>> sub_index;
    for (int z : boundary(t_, prefix)) {
      std::vector<std::pair<int, int>> sub;
      std::vector<int>& idx = sub_index[z];
      for (std::size_t j = 0; j < routes.size(); ++j) {
        const LabelPath& p = routes[j];
        int uses = static_cast<int>(std::count(p.labels.begin(), p.labels.end(), z));
        ensure(uses <= 1, "a route uses one adhesion twice");
        for (std::size_t s = 0; s < p.labels.size(); ++s)
          if (p.labels[s] == z) {
            sub.emplace_back(p.vertices[s], p.vertices[s + 1]);
            idx.push_back(static_cast<int>(j));
          }
      }
      sub_paths[z] = run(z, sub);
    }

    std::vector<std::vector<int>> stitched;
    for (std::size_t j = 0; j < routes.size(); ++j) {
      const LabelPath& p = routes[j];
      std::vector<int> q{p.vertices.front()};
      for (std::size_t s = 0; s < p.labels.size(); ++s) {
        int z = p.labels[s];
        if (z < 0) {
          q.push_back(p.vertices[s + 1]);
          continue;
        }
        const auto& idx = sub_index.at(z);
        auto pos = std::find(idx.begin(), idx.end(), static_cast<int>(j)) - idx.begin();
        const auto& piece = sub_paths.at(z)[pos];
        q.insert(q.end(), piece.begin() + 1, piece.end());
      }
      stitched.push_back(q);
    }

    vset::insert(out_.selected, x0);
    PathFamily family{x0, w, {}};
    for (std::size_t j = requests.size(); j < stitched.size(); ++j) family.paths.push_back(stitched[j]);
    out_.families[x0] = family;
    VertexSet quotient_margin;
    for (int y : prefix) quotient_margin = vset::unite(quotient_margin, t_.bag(y));
    quotient_margin = vset::minus(quotient_margin, sep);
    std::vector<VertexSet> bags;
    if (requests.empty()) {
      bags.push_back(quotient_margin);
    } else {
      for (const auto& b : local_path) {
        VertexSet r = vset::intersect(b, quotient_margin);
        if (!r.empty()) bags.push_back(r);
      }
    }
    out_.marginal_paths[x0] = bags;
    audit.max_marginal_width = std::max(audit.max_marginal_width, bags_width(bags));

    std::vector<std::vector<int>> answers(stitched.begin(), stitched.begin() + size);
    VertexSet here = vset::minus(out_.selected, selected_before);
    for (int x : here) {
      const VertexSet& comp = views_.at(x).component;
      int count = 0;
      for (const auto& q : answers)
        if (meets(q, comp)) ++count;
      int load = 0;
      for (int y : here) {
        if (y == x || !t_.is_ancestor_or_self(y, x)) continue;
        for (const auto& p : out_.families.at(y).paths)
          if (meets(p, comp)) ++load;
      }
      audit.max_budget = std::max(audit.max_budget, count + load);
      ensure(count + load <= load_bound(k), "request budget exceeded at node " + std::to_string(x));
    }
    return answers;
  }

 private:
  const Graph& g_;
  const TreeDecomposition& t_;
  RoutingResult& out_;
  std::map<int, NodeView> views_;
};

std::map<int, int> compute_loads(const TreeDecomposition& t, const RoutingResult& r) {
  std::map<int, int> loads;
  for (int x : r.selected) {
    VertexSet comp = node_view(t, x).component;
    int load = 0;
    for (int y : t.ancestors(x)) {
      auto it = r.families.find(y);
      if (it == r.families.end()) continue;
      for (const auto& p : it->second.paths)
        if (meets(p, comp)) ++load;
    }
    loads[x] = load;
  }
  return loads;
}

}  // namespace

RoutingResult route_families(const Graph& g, const TreeDecomposition& t) {
  require(g.connected(), "graph must be connected");
  require_valid(g, t, "decomposition");
  auto roots = t.roots();
  require(roots.size() == 1, "decomposition must be a single tree");
  require(is_sane(g, t).empty(), "decomposition must be sane");
  RoutingResult out;
  out.k = width(t);
  Router(g, t, out).run(roots.front(), {});
  out.loads = compute_loads(t, out);
  for (auto [x, load] : out.loads) out.audit.max_load = std::max(out.audit.max_load, load);
  auto problems = routing_problems(g, t, out);
  ensure(problems.empty(), "routing conditions fail: " + (problems.empty() ? std::string() : problems.front()));
  return out;
}

std::vector<std::string> routing_problems(const Graph& g, const TreeDecomposition& t, const RoutingResult& r) {
  std::vector<std::string> out;
  auto roots = t.roots();
  if (roots.size() != 1 || !vset::contains(r.selected, roots.front())) return {"root is not selected"};
  int k = width(t);
  TreeDecomposition q = quotient(t, r.selected);
  std::map<int, NodeView> views;
  for (int x : t.nodes()) views[x] = node_view(t, x);
  for (int x : r.selected) {
    std::string at = "node " + std::to_string(x) + ": ";
    const NodeView& view = views.at(x);
    auto fit = r.families.find(x);
    if (fit == r.families.end()) {
      out.push_back(at + "no path family");
      continue;
    }
    const PathFamily& fam = fit->second;
    if (!view.adhesion.empty() && !vset::contains(view.margin, fam.source))
      out.push_back(at + "source outside the margin");
    VertexSet targets;
    for (const auto& p : fam.paths) {
      if (p.empty() || p.front() != fam.source) {
        out.push_back(at + "path does not start at the source");
        continue;
      }
      vset::insert(targets, p.back());
      if (vset::make(p).size() != p.size()) out.push_back(at + "path repeats a vertex");
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) out.push_back(at + "path uses a non-edge");
      for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (!vset::contains(view.component, p[i])) out.push_back(at + "path leaves the component");
      for (int y : r.selected) {
        if (y == x || !t.is_ancestor_or_self(x, y)) continue;
        int first = -1, last = -1, count = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
          if (vset::contains(views.at(y).component, p[i])) {
            if (first < 0) first = static_cast<int>(i);
            last = static_cast<int>(i);
            ++count;
          }
        if (count > 0 && last - first + 1 != count)
          out.push_back(at + "path meets the component of node " + std::to_string(y) + " twice");
      }
    }
    if (targets != view.adhesion) out.push_back(at + "targets differ from the adhesion");
    auto lit = r.loads.find(x);
    if (lit == r.loads.end() || lit->second > load_bound(k)) out.push_back(at + "load exceeds the bound");
    auto mit = r.marginal_paths.find(x);
    if (mit == r.marginal_paths.end()) {
      out.push_back(at + "no marginal path decomposition");
      continue;
    }
    Graph mg = marginal_graph(g, q, x);
    TreeDecomposition pd = path_from_bags(mit->second);
    if (!validate_decomposition(mg, pd).ok()) out.push_back(at + "marginal path decomposition is invalid");
    if (width(pd) > marginal_pathwidth_bound(k)) out.push_back(at + "marginal path decomposition is too wide");
  }
  auto recomputed = compute_loads(t, r);
  if (recomputed != r.loads) out.push_back("recorded loads differ from recomputed loads");
  return out;
}

TreeDecomposition quotient(const TreeDecomposition& t, const VertexSet& keep) {
  for (int root : t.roots()) require(vset::contains(keep, root), "kept nodes must include every root");
  std::map<int, int> owner;
  std::map<int, VertexSet> bags;
  for (int y : t.preorder()) {
    int p = t.parent(y);
    owner[y] = vset::contains(keep, y) ? y : owner.at(p);
    bags[owner[y]] = vset::unite(bags[owner[y]], t.bag(y));
  }
  TreeDecomposition out;
  for (int x : t.preorder()) {
    if (!vset::contains(keep, x)) continue;
    int p = t.parent(x);
    out.add_node(x, bags.at(x), p < 0 ? -1 : owner.at(p));
  }
  return out;
}

Certificate conflict_guidance(const Graph& g, const TreeDecomposition& quotient_t,
                              const std::map<int, PathFamily>& families, int k, ConflictReport* report) {
  struct Pair {
    int node;
    int target;
    const std::vector<int>* path;
  };
  std::vector<Pair> pairs;
  for (int x : quotient_t.preorder())
    for (int v : adhesion(quotient_t, x)) {
      auto it = families.find(x);
      require(it != families.end(), "node " + std::to_string(x) + " has no path family");
      const std::vector<int>* found = nullptr;
      for (const auto& p : it->second.paths)
        if (!p.empty() && p.back() == v) found = &p;
      require(found != nullptr, "no path of node " + std::to_string(x) + " reaches " + std::to_string(v));
      pairs.push_back({x, v, found});
    }
  std::vector<VertexSet> touched;
  for (const auto& p : pairs) touched.push_back(vset::make(*p.path));

  ConflictReport local;
  ConflictReport& rep = report ? *report : local;
  rep = ConflictReport{};
  rep.pairs = static_cast<int>(pairs.size());
  std::vector<int> color(pairs.size(), -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::set<int> used;
    int back = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (pairs[i].target != pairs[j].target && vset::intersects(touched[i], touched[j])) {
        ++back;
        used.insert(color[j]);
      }
    rep.max_back_degree = std::max(rep.max_back_degree, back);
    int c = 0;
    while (used.count(c)) ++c;
    color[i] = c;
    rep.colors = std::max(rep.colors, c + 1);
  }
  ensure(pairs.empty() || rep.max_back_degree <= conflict_color_bound(k) - 1, "conflict back-degree exceeds its bound");
  ensure(rep.colors <= conflict_color_bound(k), "conflict coloring exceeds its bound");

  Certificate out;
  out.graph = g;
  out.decomposition = quotient_t;
  out.captured = CapturedFamily::Adhesions;
  for (int c = 0; c < rep.colors; ++c) {
    Graph union_graph;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (color[i] != c) continue;
      const auto& p = *pairs[i].path;
      for (int v : p) union_graph.add_vertex(v);
      for (std::size_t s = 0; s + 1 < p.size(); ++s) union_graph.add_edge(p[s], p[s + 1]);
    }
    for (const auto& comp : union_graph.components()) {
      int target = -1;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (color[i] != c || !vset::contains(comp, pairs[i].path->front())) continue;
        ensure(target < 0 || target == pairs[i].target, "a color class joins paths with different targets");
        target = pairs[i].target;
      }
      ensure(target >= 0, "color component without a path");
      out.guidance.trees.push_back(bfs_tree(union_graph, target));
      out.coloring.color.push_back(c);
    }
  }
  ensure_certificate(out, "conflict guidance");
  return out;
}

TreeDecomposition oracle_forest(const Graph& g) {
  TreeDecomposition joined;
  int next = 0;
  for (const auto& comp : g.components()) {
    TreeDecomposition part = renumber(exact_treewidth(g.induced(comp)).witness);
    for (int x : part.preorder()) {
      int p = part.parent(x);
      joined.add_node(next + x, part.bag(x), p < 0 ? -1 : next + p);
    }
    next += static_cast<int>(part.size());
  }
  return joined;
}

LowPathwidthResult low_pw_decomp(const Graph& g) { return low_pw_decomp(g, oracle_forest(g)); }

LowPathwidthResult low_pw_decomp(const Graph& g, const TreeDecomposition& t) {
  require_valid(g, t, "decomposition");
  TreeDecomposition clean = renumber(sanitize(g, t));
  LowPathwidthResult out;
  out.k = std::max(0, width(clean));
  int first_node = 0;
  bool any = false;
  for (const auto& comp : g.components()) {
    Graph gc = g.induced(comp);
    TreeDecomposition part = renumber(split_by_components(gc, restrict_to(clean, comp)));
    part = renumber(sanitize(gc, part));
    TreeDecomposition shifted;
    for (int x : part.preorder()) {
      int p = part.parent(x);
      shifted.add_node(first_node + x, part.bag(x), p < 0 ? -1 : first_node + p);
    }
    first_node += static_cast<int>(part.size());
    RoutingResult routed = route_families(gc, shifted);
    TreeDecomposition main = quotient(shifted, routed.selected);
    ensure(is_sane(gc, main).empty(), "quotient decomposition is not sane");
    ConflictReport rep;
    Certificate cert = conflict_guidance(gc, main, routed.families, routed.k, &rep);
    for (int x : main.preorder()) {
      int p = main.parent(x);
      out.main.add_node(x, main.bag(x), p);
      out.marginal_paths[x] = path_from_bags(routed.marginal_paths.at(x));
    }
    out.adhesion_certificate = any ? cert_disjoint_union(out.adhesion_certificate, cert) : cert;
    any = true;
    RoutingAudit& a = out.audit;
    a.calls += routed.audit.calls;
    a.max_requests = std::max(a.max_requests, routed.audit.max_requests);
    a.max_budget = std::max(a.max_budget, routed.audit.max_budget);
    a.max_load = std::max(a.max_load, routed.audit.max_load);
    a.max_marginal_width = std::max(a.max_marginal_width, routed.audit.max_marginal_width);
    out.conflicts.pairs += rep.pairs;
    out.conflicts.max_back_degree = std::max(out.conflicts.max_back_degree, rep.max_back_degree);
    out.conflicts.colors = std::max(out.conflicts.colors, rep.colors);
  }
  if (any) {
    out.adhesion_certificate.decomposition = out.main;
    out.adhesion_certificate.captured = CapturedFamily::Adhesions;
    ensure_certificate(out.adhesion_certificate, "adhesion certificate");
  }
  return out;
}

NestedTreeDecomposition build_nested(const Graph& g, const TreeDecomposition& main,
                                     const std::map<int, TreeDecomposition>& marginal) {
  require_valid(g, main, "main decomposition");
  require(is_sane(g, main).empty(), "main decomposition must be sane");
  NestedTreeDecomposition out;
  out.main = main;
  for (int x : main.nodes()) {
    auto it = marginal.find(x);
    require(it != marginal.end(), "node " + std::to_string(x) + " has no marginal decomposition");
    Graph mg = marginal_graph(g, main, x);
    require_valid(mg, it->second, "marginal decomposition of node " + std::to_string(x));
    require(it->second.roots().size() == 1, "marginal decomposition of node " + std::to_string(x) + " is not one tree");
    out.marginal[x] = it->second;
  }
  require(marginal.size() == main.size(), "marginal decompositions for unknown nodes");
  return out;
}

int nested_width(const NestedTreeDecomposition& n) {
  int inner = -1, sep = 0;
  for (const auto& [x, d] : n.marginal) {
    inner = std::max(inner, width(d));
    sep = std::max(sep, static_cast<int>(adhesion(n.main, x).size()));
  }
  return inner < 0 ? -1 : inner + sep;
}

TreeDecomposition flatten(const NestedTreeDecomposition& n) {
  TreeDecomposition out;
  std::map<std::pair<int, int>, int> id;
  int next = 0;
  for (int x : n.main.preorder()) {
    const TreeDecomposition& inner = n.marginal.at(x);
    VertexSet sep = adhesion(n.main, x);
    for (int y : inner.preorder()) {
      int parent = -1;
      int py = inner.parent(y);
      if (py >= 0) {
        parent = id.at({x, py});
      } else if (n.main.parent(x) >= 0) {
        int up = n.main.parent(x);
        VertexSet up_margin = vset::minus(n.main.bag(up), adhesion(n.main, up));
        VertexSet shared = vset::intersect(sep, up_margin);
        ensure(!shared.empty(), "node " + std::to_string(x) + " shares no margin vertex with its parent");
        for (int z : n.marginal.at(up).preorder())
          if (vset::subset(shared, n.marginal.at(up).bag(z))) {
            parent = id.at({up, z});
            break;
          }
        ensure(parent >= 0, "no marginal bag holds the shared adhesion of node " + std::to_string(x));
      }
      id[{x, y}] = next;
      out.add_node(next++, vset::unite(sep, inner.bag(y)), parent);
    }
  }
  return out;
}

std::map<int, int> colorful_coloring(const Graph& g, const TreeDecomposition& t, const TreeDecomposition& order) {
  std::vector<VertexSet> seps;
  for (int x : t.nodes()) seps.push_back(adhesion(t, x));
  Graph h = with_cliques(g, seps);
  require_valid(h, order, "ordering decomposition");
  std::map<int, int> top;
  int rank = 0;
  for (int x : order.preorder()) {
    for (int v : order.bag(x)) top.emplace(v, rank);
    ++rank;
  }
  std::vector<int> verts = g.vertices();
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return top.at(a) < top.at(b); });
  std::map<int, int> color;
  for (int v : verts) {
    std::set<int> used;
    for (int w : h.neighbors(v)) {
      auto it = color.find(w);
      if (it != color.end()) used.insert(it->second);
    }
    int c = 0;
    while (used.count(c)) ++c;
    color[v] = c;
  }
  return color;
}

std::vector<std::string> colorful_problems(const Graph& g, const TreeDecomposition& t, const std::map<int, int>& color) {
  std::vector<std::string> out;
  for (int v : g.vertices())
    if (!color.count(v)) out.push_back("vertex " + std::to_string(v) + " is uncolored");
  if (!out.empty()) return out;
  for (auto [u, v] : g.edges())
    if (color.at(u) == color.at(v)) out.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is monochromatic");
  for (int x : t.nodes()) {
    std::set<int> seen;
    for (int v : adhesion(t, x))
      if (!seen.insert(color.at(v)).second) out.push_back("adhesion of node " + std::to_string(x) + " repeats a color");
  }
  return out;
}

PipelineResult full_pipeline(const Graph& g) {
  if (g.empty()) return PipelineResult{};
  return full_pipeline(g, oracle_forest(g));
}

PipelineResult full_pipeline(const Graph& g, const TreeDecomposition& t) {
  PipelineResult out;
  if (g.empty()) return out;
  LowPathwidthResult low = low_pw_decomp(g, t);
  PipelineReport& rep = out.report;
  rep.k = low.k;
  rep.audit = low.audit;
  rep.conflicts = low.conflicts;
  rep.main_nodes = static_cast<int>(low.main.size());
  std::map<int, TreeDecomposition> certified;
  for (int x : low.main.nodes()) {
    rep.max_adhesion = std::max(rep.max_adhesion, static_cast<int>(adhesion(low.main, x).size()));
    Graph mg = marginal_graph(g, low.main, x);
    const TreeDecomposition& pd = low.marginal_paths.at(x);
    rep.max_marginal_pathwidth = std::max(rep.max_marginal_pathwidth, width(pd));
    PathwidthReport pr;
    Certificate c = certify_pathwidth(mg, pd, &pr);
    rep.max_semigroup = std::max(rep.max_semigroup, pr.semigroup_size);
    rep.budgets_ok = rep.budgets_ok && pr.within_budget();
    rep.max_marginal_width = std::max(rep.max_marginal_width, width(c.decomposition));
    certified[x] = c.decomposition;
  }
  NestedTreeDecomposition nested = build_nested(g, low.main, certified);
  rep.nested_width = nested_width(nested);
  rep.width_bound = rep.max_marginal_width + rep.max_adhesion;
  ensure(rep.nested_width <= rep.width_bound, "nested width exceeds the audited bound");
  TreeDecomposition flat = flatten(nested);
  require_valid(g, flat, "flattened decomposition");
  rep.flattened_width = width(flat);
  ensure(rep.flattened_width <= rep.nested_width, "flattening increased the width");
  auto coloring = colorful_coloring(g, low.main, flat);
  auto cp = colorful_problems(g, low.main, coloring);
  ensure(cp.empty(), "colorful coloring fails: " + (cp.empty() ? std::string() : cp.front()));
  for (auto [v, c] : coloring) rep.colorful_colors = std::max(rep.colorful_colors, c + 1);
  ensure(rep.colorful_colors <= colorful_color_bound(rep.k), "colorful coloring exceeds its bound");
  out.decomposition = renumber(sanitize(g, flat));
  require_valid(g, out.decomposition, "final decomposition");
  rep.final_width = width(out.decomposition);
  ensure(rep.final_width <= rep.width_bound, "final width exceeds the audited bound");
  out.adhesion_certificate = low.adhesion_certificate;
  return out;
}

}  // namespace guidepost
