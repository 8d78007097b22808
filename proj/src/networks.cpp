#include "guidepost/networks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

std::vector<std::vector<int>> incidence(const Hypergraph& h, std::map<int, int>& index) {
  index.clear();
  for (std::size_t i = 0; i < h.vertices.size(); ++i) index[h.vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> inc(h.vertices.size());
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    for (int v : h.edges[e].vertices) inc[index.at(v)].push_back(static_cast<int>(e));
  return inc;
}

// BFS over vertices and hyperedges from source, never using the skipped hyperedge. Returns the
// hyperedge used to enter each vertex (-1 for the source, -2 when unreached) and its predecessor.
struct Search {
  std::vector<int> via_edge;
  std::vector<int> via_vertex;
};

Search search(const Hypergraph& h, const std::vector<std::vector<int>>& inc, const std::map<int, int>& index,
              int source, int skip) {
  Search s;
  s.via_edge.assign(h.vertices.size(), -2);
  s.via_vertex.assign(h.vertices.size(), -1);
  std::vector<char> used(h.edges.size(), 0);
  std::deque<int> queue{index.at(source)};
  s.via_edge[queue.front()] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int e : inc[x]) {
      if (e == skip || used[e]) continue;
      used[e] = 1;
      for (int w : h.edges[e].vertices) {
        int y = index.at(w);
        if (s.via_edge[y] != -2) continue;
        s.via_edge[y] = e;
        s.via_vertex[y] = x;
        queue.push_back(y);
      }
    }
  }
  return s;
}

void shortcut(HyperPath& p) {
  HyperPath out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    int v = p.vertices[i];
    auto it = std::find(out.vertices.begin(), out.vertices.end(), v);
    if (it != out.vertices.end()) {
      std::size_t keep = static_cast<std::size_t>(it - out.vertices.begin());
      out.vertices.resize(keep + 1);
      out.edges.resize(keep);
      continue;
    }
    if (i > 0) out.edges.push_back(p.edges[i - 1]);
    out.vertices.push_back(v);
  }
  p = out;
}

void append(HyperPath& p, const HyperPath& tail, int joining_edge) {
  if (p.vertices.empty()) {
    p = tail;
    return;
  }
  if (p.vertices.back() != tail.vertices.front()) {
    p.edges.push_back(joining_edge);
    p.vertices.push_back(tail.vertices.front());
  }
  p.vertices.insert(p.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  p.edges.insert(p.edges.end(), tail.edges.begin(), tail.edges.end());
}

// Unit-capacity hyperedge flow of value two from sources to targets inside one bridge union.
std::pair<HyperPath, HyperPath> bridge_paths(const Hypergraph& h, const VertexSet& part,
                                             const std::vector<int>& part_edges, const VertexSet& sources,
                                             const VertexSet& targets) {
  VertexSet common = vset::intersect(sources, targets);
  if (!common.empty()) {
    HyperPath p{{common.front()}, {}};
    return {p, p};
  }
  struct Arc {
    int to;
    int cap;
    int back;
    bool forward;
  };
  int nv = static_cast<int>(part.size());
  int ne = static_cast<int>(part_edges.size());
  int total = 2 + nv + 2 * ne;
  std::vector<std::vector<Arc>> arcs(total);
  auto add = [&](int a, int b, int cap) {
    arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size()), true});
    arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1, false});
  };
  auto vnode = [&](int v) { return 2 + static_cast<int>(std::lower_bound(part.begin(), part.end(), v) - part.begin()); };
  for (int v : sources) add(0, vnode(v), 2);
  for (int i = 0; i < ne; ++i) {
    int in = 2 + nv + 2 * i, out = in + 1;
    add(in, out, 1);
    for (int v : h.edges[part_edges[i]].vertices) {
      add(vnode(v), in, 2);
      add(out, vnode(v), 2);
    }
  }
  for (int v : targets) add(vnode(v), 1, 2);
  int flow = 0;
  while (flow < 2) {
    std::vector<std::pair<int, int>> prev(total, {-1, -1});
    prev[0] = {0, -1};
    std::deque<int> queue{0};
    while (!queue.empty() && prev[1].first < 0) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < arcs[x].size(); ++a) {
        const Arc& arc = arcs[x][a];
        if (arc.cap <= 0 || prev[arc.to].first >= 0) continue;
        prev[arc.to] = {x, static_cast<int>(a)};
        queue.push_back(arc.to);
      }
    }
    ensure(prev[1].first >= 0, "bridge union does not carry two hyperedge-disjoint paths");
    for (int y = 1; y != 0; y = prev[y].first) {
      Arc& arc = arcs[prev[y].first][prev[y].second];
      arc.cap -= 1;
      arcs[y][arc.back].cap += 1;
    }
    ++flow;
  }
  auto flow_on = [&](int x, std::size_t a) {
    const Arc& arc = arcs[x][a];
    return arc.forward ? arcs[arc.to][arc.back].cap : 0;
  };
  std::vector<HyperPath> paths;
  for (int r = 0; r < 2; ++r) {
    HyperPath p;
    int x = 0;
    int pending_edge = -1;
    while (x != 1) {
      std::size_t a = 0;
      while (a < arcs[x].size() && flow_on(x, a) <= 0) ++a;
      ensure(a < arcs[x].size(), "flow decomposition lost its way");
      Arc& arc = arcs[x][a];
      arc.cap += 1;
      arcs[arc.to][arc.back].cap -= 1;
      int y = arc.to;
      if (y >= 2 && y < 2 + nv) {
        if (!p.vertices.empty()) p.edges.push_back(pending_edge);
        p.vertices.push_back(part[y - 2]);
      } else if (y >= 2 + nv) {
        pending_edge = part_edges[(y - 2 - nv) / 2];
      }
      x = y;
    }
    shortcut(p);
    paths.push_back(p);
  }
  return {paths[0], paths[1]};
}

bool covers(const std::vector<VertexSet>& bags, const VertexSet& s) {
  for (const auto& b : bags)
    if (vset::subset(s, b)) return true;
  return s.empty();
}

int bags_width(const std::vector<VertexSet>& bags) {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<VertexSet> restrict_bags(const std::vector<VertexSet>& bags, const VertexSet& keep) {
  std::vector<VertexSet> out;
  for (const auto& b : bags) {
    VertexSet r = vset::intersect(b, keep);
    if (!r.empty()) out.push_back(r);
  }
  return out;
}

std::vector<std::pair<int, VertexSet>> edge_multiset(const Hypergraph& h) {
  std::vector<std::pair<int, VertexSet>> out;
  for (const auto& e : h.edges) out.emplace_back(e.label, e.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> network_problems(const Network& net) {
  std::vector<std::string> out;
  const Hypergraph& h = net.hypergraph;
  if (!vset::contains(h.vertices, net.source)) out.push_back("source is not a vertex");
  if (!vset::contains(h.vertices, net.sink)) out.push_back("sink is not a vertex");
  if (net.source == net.sink) out.push_back("source equals sink");
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (h.edges[e].vertices.empty()) out.push_back("hyperedge " + std::to_string(e) + " is empty");
    if (!vset::subset(h.edges[e].vertices, h.vertices))
      out.push_back("hyperedge " + std::to_string(e) + " leaves the vertex set");
  }
  if (out.empty() && !h.connected()) out.push_back("hypergraph is disconnected");
  return out;
}

std::vector<std::string> hyperpath_problems(const Hypergraph& h, const HyperPath& p, int from, int to) {
  std::vector<std::string> out;
  if (p.vertices.empty()) return {"path is empty"};
  if (p.edges.size() + 1 != p.vertices.size()) return {"path has mismatched vertex and edge counts"};
  if (p.vertices.front() != from) out.push_back("path does not start at " + std::to_string(from));
  if (p.vertices.back() != to) out.push_back("path does not end at " + std::to_string(to));
  VertexSet seen = vset::make(p.vertices);
  if (seen.size() != p.vertices.size()) out.push_back("path repeats a vertex");
  for (std::size_t j = 0; j < p.edges.size(); ++j) {
    int e = p.edges[j];
    if (e < 0 || e >= static_cast<int>(h.edges.size())) {
      out.push_back("path uses unknown hyperedge " + std::to_string(e));
      continue;
    }
    const VertexSet& ev = h.edges[e].vertices;
    if (!vset::contains(ev, p.vertices[j]) || !vset::contains(ev, p.vertices[j + 1]))
      out.push_back("hyperedge " + std::to_string(e) + " does not join consecutive path vertices");
  }
  return out;
}

VertexSet cutedge_element(const Network& net, const CutedgeDecomposition& d, int i) {
  if (i == 0) return {net.source};
  if (i == d.size() + 1) return {net.sink};
  return net.hypergraph.edges[d.cutedges[i - 1]].vertices;
}

CutedgeDecomposition cutedge_decomposition(const Network& net) {
  auto problems = network_problems(net);
  require(problems.empty(), "invalid network: " + (problems.empty() ? std::string() : problems.front()));
  const Hypergraph& h = net.hypergraph;
  std::map<int, int> index;
  auto inc = incidence(h, index);
  int s = index.at(net.source), t = index.at(net.sink);
  std::vector<char> is_cut(h.edges.size(), 0);
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    is_cut[e] = search(h, inc, index, net.source, static_cast<int>(e)).via_edge[t] == -2;

  CutedgeDecomposition d;
  Search full = search(h, inc, index, net.source, -1);
  for (int y = t; y != s; y = full.via_vertex[y])
    if (is_cut[full.via_edge[y]]) d.cutedges.push_back(full.via_edge[y]);
  std::reverse(d.cutedges.begin(), d.cutedges.end());
  int p = d.size();
  ensure(static_cast<int>(std::count(is_cut.begin(), is_cut.end(), 1)) == p,
         "a cutedge is missing from a source-sink path");

  Hypergraph rest;
  rest.vertices = h.vertices;
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (!is_cut[e]) rest.edges.push_back(h.edges[e]);
  d.bridges.assign(p + 1, {});
  d.appendices.assign(p, {});
  for (const auto& comp : rest.primal().components()) {
    std::vector<int> touched;
    for (int i = 0; i <= p + 1; ++i)
      if (vset::intersects(comp, cutedge_element(net, d, i))) touched.push_back(i);
    CutedgeComponent c{comp, false, 0};
    if (touched.size() == 2 && touched[1] == touched[0] + 1) {
      c.bridge = true;
      c.index = touched[0];
      d.bridges[c.index] = vset::unite(d.bridges[c.index], comp);
    } else {
      ensure(touched.size() == 1 && touched[0] >= 1 && touched[0] <= p,
             "component " + vset::to_string(comp) + " meets non-consecutive cutedges");
      c.index = touched[0];
      d.appendices[c.index - 1] = vset::unite(d.appendices[c.index - 1], comp);
    }
    d.components.push_back(c);
  }
  return d;
}

std::pair<HyperPath, HyperPath> two_disjoint_paths(const Network& net) {
  return two_disjoint_paths(net, cutedge_decomposition(net));
}

std::pair<HyperPath, HyperPath> two_disjoint_paths(const Network& net, const CutedgeDecomposition& d) {
  const Hypergraph& h = net.hypergraph;
  std::vector<char> is_cut(h.edges.size(), 0);
  for (int e : d.cutedges) is_cut[e] = 1;
  HyperPath first, second;
  for (int i = 0; i <= d.size(); ++i) {
    const VertexSet& part = d.bridges[i];
    std::vector<int> part_edges;
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      if (!is_cut[e] && vset::subset(h.edges[e].vertices, part)) part_edges.push_back(static_cast<int>(e));
    auto [a, b] = bridge_paths(h, part, part_edges, vset::intersect(cutedge_element(net, d, i), part),
                               vset::intersect(cutedge_element(net, d, i + 1), part));
    int joining = i == 0 ? -1 : d.cutedges[i - 1];
    append(first, a, joining);
    append(second, b, joining);
  }
  return {first, second};
}

std::vector<std::string> path_decomposition_problems(const Hypergraph& h, const VertexSet& within,
                                                     const std::vector<VertexSet>& bags) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < bags.size(); ++i)
    if (!vset::subset(bags[i], within)) out.push_back("bag " + std::to_string(i) + " leaves its part");
  for (int v : within) {
    int first = -1, last = -1, count = 0;
    for (std::size_t i = 0; i < bags.size(); ++i)
      if (vset::contains(bags[i], v)) {
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
        ++count;
      }
    if (count == 0)
      out.push_back("vertex " + std::to_string(v) + " is in no bag");
    else if (last - first + 1 != count)
      out.push_back("bags of vertex " + std::to_string(v) + " are not contiguous");
  }
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    VertexSet part = vset::intersect(h.edges[e].vertices, within);
    if (!covers(bags, part)) out.push_back("hyperedge " + std::to_string(e) + " is in no bag");
  }
  return out;
}

std::vector<std::string> witness_problems(const Network& net, const ThinnessWitness& w) {
  CutedgeDecomposition d = cutedge_decomposition(net);
  int p = d.size();
  if (static_cast<int>(w.bridges.size()) != p + 1 || static_cast<int>(w.appendices.size()) != p)
    return {"witness does not match the cutedge count"};
  std::vector<std::string> out;
  auto check = [&](const std::string& name, const VertexSet& part, const std::vector<VertexSet>& bags, int limit,
                   const VertexSet& first, const VertexSet* last) {
    if (bags.empty()) {
      out.push_back(name + " has no bags");
      return;
    }
    for (const auto& msg : path_decomposition_problems(net.hypergraph, part, bags)) out.push_back(name + ": " + msg);
    if (bags_width(bags) > limit) out.push_back(name + " exceeds width " + std::to_string(limit));
    if (!vset::subset(vset::intersect(first, part), bags.front()))
      out.push_back(name + " does not start with its left interface");
    if (last && !vset::subset(vset::intersect(*last, part), bags.back()))
      out.push_back(name + " does not end with its right interface");
  };
  for (int i = 0; i <= p; ++i) {
    VertexSet right = cutedge_element(net, d, i + 1);
    check("bridge " + std::to_string(i), d.bridges[i], w.bridges[i], 2 * w.k + 1, cutedge_element(net, d, i), &right);
  }
  for (int i = 1; i <= p; ++i)
    check("appendix " + std::to_string(i), d.appendices[i - 1], w.appendices[i - 1], w.k, cutedge_element(net, d, i),
          nullptr);
  return out;
}

ThinnessWitness single_bag_witness(const Network& net, int k) {
  CutedgeDecomposition d = cutedge_decomposition(net);
  ThinnessWitness w;
  w.k = k;
  for (const auto& b : d.bridges) w.bridges.push_back({b});
  for (const auto& a : d.appendices) w.appendices.push_back({a});
  return w;
}

std::vector<VertexSet> thin_to_pathdecomp(const Network& net, const ThinnessWitness& w) {
  CutedgeDecomposition d = cutedge_decomposition(net);
  require(static_cast<int>(w.bridges.size()) == d.size() + 1 && static_cast<int>(w.appendices.size()) == d.size(),
          "witness does not match the cutedge count");
  std::vector<VertexSet> bags = w.bridges[0];
  for (int i = 1; i <= d.size(); ++i) {
    VertexSet e = cutedge_element(net, d, i);
    if (w.appendices[i - 1].empty()) bags.push_back(e);
    for (const auto& b : w.appendices[i - 1]) bags.push_back(vset::unite(b, e));
    bags.insert(bags.end(), w.bridges[i].begin(), w.bridges[i].end());
  }
  return bags;
}

Hypergraph replace_hyperedge(const Hypergraph& h, int edge_index, const Hypergraph& k_graph) {
  require(edge_index >= 0 && edge_index < static_cast<int>(h.edges.size()), "unknown hyperedge");
  Hypergraph out;
  out.vertices = vset::unite(h.vertices, k_graph.vertices);
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (static_cast<int>(e) != edge_index) out.edges.push_back(h.edges[e]);
  out.edges.insert(out.edges.end(), k_graph.edges.begin(), k_graph.edges.end());
  return out;
}

std::pair<Network, ThinnessWitness> replace_cutedge(const Network& net, const ThinnessWitness& w, int edge_index,
                                                    const Hypergraph& k_graph) {
  CutedgeDecomposition d = cutedge_decomposition(net);
  auto pos = std::find(d.cutedges.begin(), d.cutedges.end(), edge_index);
  require(pos != d.cutedges.end(), "hyperedge " + std::to_string(edge_index) + " is not a cutedge");
  int ell = static_cast<int>(pos - d.cutedges.begin()) + 1;
  auto wp = witness_problems(net, w);
  require(wp.empty(), "invalid thinness witness: " + (wp.empty() ? std::string() : wp.front()));
  const VertexSet& e = net.hypergraph.edges[edge_index].vertices;
  require(vset::intersect(k_graph.vertices, net.hypergraph.vertices) == e,
          "replacement meets the network outside the replaced hyperedge");
  require(k_graph.connected(), "replacement is disconnected");
  require(static_cast<int>(k_graph.vertices.size()) <= w.k + 1, "replacement has too many vertices");
  require(k_graph.max_edge_size() <= std::max(w.k, 2), "replacement has an oversized hyperedge");
  for (const auto& f : k_graph.edges)
    require(vset::subset(f.vertices, k_graph.vertices), "replacement hyperedge leaves its vertex set");

  Network next{replace_hyperedge(net.hypergraph, edge_index, k_graph), net.source, net.sink};
  CutedgeDecomposition nd = cutedge_decomposition(next);
  int old_count = static_cast<int>(net.hypergraph.edges.size());
  std::map<int, int> old_position;
  for (int i = 0; i < d.size(); ++i) old_position[d.cutedges[i]] = i + 1;
  // Element index of the old sequence for each new element, or -1 for a hyperedge of the replacement.
  auto old_element = [&](int a) {
    if (a == 0) return 0;
    if (a == nd.size() + 1) return d.size() + 1;
    int j = nd.cutedges[a - 1];
    if (j >= old_count - 1) return next.hypergraph.edges[j].vertices == e ? ell : -1;
    return old_position.at(j < edge_index ? j : j + 1);
  };

  const VertexSet& kv = k_graph.vertices;
  const VertexSet& w_ell = d.appendices[ell - 1];
  const auto& s_ell = w.appendices[ell - 1];
  ThinnessWitness out;
  out.k = w.k;
  for (int a = 0; a <= nd.size(); ++a) {
    const VertexSet& part = nd.bridges[a];
    int oa = old_element(a), ob = old_element(a + 1);
    if (oa >= 0 && ob == oa + 1 && d.bridges[oa] == part) {
      out.bridges.push_back(w.bridges[oa]);
      continue;
    }
    std::vector<VertexSet> bags;
    if (vset::intersects(part, d.bridges[ell - 1])) {
      ensure(vset::subset(d.bridges[ell - 1], part), "left bridge union is split by the replacement");
      bags = w.bridges[ell - 1];
    }
    VertexSet core = vset::intersect(part, kv);
    std::vector<VertexSet> middle = restrict_bags(s_ell, vset::intersect(part, w_ell));
    if (middle.empty()) middle.push_back({});
    if (!core.empty() || vset::intersects(part, w_ell))
      for (const auto& b : middle) bags.push_back(vset::unite(b, core));
    if (vset::intersects(part, d.bridges[ell])) {
      ensure(vset::subset(d.bridges[ell], part), "right bridge union is split by the replacement");
      bags.insert(bags.end(), w.bridges[ell].begin(), w.bridges[ell].end());
    }
    out.bridges.push_back(bags);
  }
  for (int a = 1; a <= nd.size(); ++a) {
    const VertexSet& part = nd.appendices[a - 1];
    int oa = old_element(a);
    if (oa >= 0 && d.appendices[oa - 1] == part) {
      out.appendices.push_back(w.appendices[oa - 1]);
      continue;
    }
    std::vector<VertexSet> bags{vset::intersect(part, kv)};
    for (const auto& b : restrict_bags(s_ell, vset::intersect(part, w_ell))) bags.push_back(b);
    out.appendices.push_back(bags);
  }
  auto problems = witness_problems(next, out);
  ensure(problems.empty(), "witness surgery failed: " + (problems.empty() ? std::string() : problems.front()));
  return {next, out};
}

LocalDecomposition local_decomp(const Graph& g, const TreeDecomposition& t, int u, int v) {
  auto roots = t.roots();
  require(roots.size() == 1, "decomposition must have a single root");
  int root = roots.front();
  require(vset::contains(t.bag(root), u) && vset::contains(t.bag(root), v), "terminals must lie in the root bag");
  require(g.connected(), "graph must be connected");
  require_valid(g, t, "decomposition");
  require(is_sane(g, t).empty(), "decomposition must be sane");
  int k = width(t);

  LocalDecomposition out;
  out.prefix = {root};
  Network net{hypertorso(g, t, out.prefix), u, v};
  if (u == v) {
    out.torso = net.hypergraph;
    out.first = out.second = HyperPath{{u}, {}};
    out.path = {t.bag(root)};
    out.steps.push_back({out.prefix, 0, -1, static_cast<int>(t.bag(root).size()) - 1});
    return out;
  }
  ThinnessWitness w = single_bag_witness(net, k);
  for (;;) {
    CutedgeDecomposition d = cutedge_decomposition(net);
    int pick = -1;
    for (int e : d.cutedges)
      if (net.hypergraph.edges[e].label >= 0) {
        pick = e;
        break;
      }
    LocalStep step{out.prefix, d.size(), -1, bags_width(thin_to_pathdecomp(net, w))};
    if (pick < 0) {
      out.steps.push_back(step);
      break;
    }
    int z = net.hypergraph.edges[pick].label;
    step.expanded = z;
    out.steps.push_back(step);
    VertexSet sep = adhesion(t, z);
    Hypergraph k_graph;
    k_graph.vertices = t.bag(z);
    for (auto [a, b] : g.induced(t.bag(z)).edges())
      if (!vset::contains(sep, a) || !vset::contains(sep, b)) k_graph.edges.push_back({{a, b}, -1});
    for (int c : t.children(z)) {
      VertexSet s = adhesion(t, c);
      if (!s.empty()) k_graph.edges.push_back({s, c});
    }
    std::tie(net, w) = replace_cutedge(net, w, pick, k_graph);
    vset::insert(out.prefix, z);
    ensure(edge_multiset(net.hypergraph) == edge_multiset(hypertorso(g, t, out.prefix)),
           "expanded network differs from the hypertorso of the grown prefix");
  }
  out.torso = net.hypergraph;
  std::tie(out.first, out.second) = two_disjoint_paths(net);
  out.path = thin_to_pathdecomp(net, w);
  auto problems = path_decomposition_problems(net.hypergraph, net.hypergraph.vertices, out.path);
  ensure(problems.empty(), "local path decomposition is invalid: " + (problems.empty() ? std::string() : problems.front()));
  ensure(bags_width(out.path) <= 2 * k + 1, "local path decomposition is too wide");
  return out;
}

}  // namespace guidepost
