#include "guidepost/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "guidepost/oracles.hpp"

namespace guidepost::gen {

std::uint64_t fuzz_seed() {
  const char* env = std::getenv("GUIDEPOST_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 0;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

namespace {

Graph numbered(int n) {
  Graph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  return g;
}

}  // namespace

Graph path_graph(int n) {
  Graph g = numbered(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n, 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g = numbered(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g = numbered(rows * cols);
  auto id = [&](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
    }
  return g;
}

Graph star_graph(int leaves) {
  Graph g = numbered(leaves + 1);
  for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph caterpillar(const std::vector<int>& legs) {
  int spine = static_cast<int>(legs.size());
  Graph g = path_graph(spine);
  int next = spine + 1;
  for (int i = 0; i < spine; ++i)
    for (int j = 0; j < legs[i]; ++j) {
      g.add_vertex(next);
      g.add_edge(i + 1, next++);
    }
  return g;
}

Graph random_graph(Rng& rng, int n, double p) {
  Graph g = numbered(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng, p)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(Rng& rng, int n, double p) {
  Graph g = random_graph(rng, n, p);
  auto comps = g.components();
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const VertexSet& prev = comps[i - 1];
    const VertexSet& cur = comps[i];
    g.add_edge(prev[uniform(rng, 0, static_cast<int>(prev.size()) - 1)],
               cur[uniform(rng, 0, static_cast<int>(cur.size()) - 1)]);
  }
  return g;
}

Graph random_tree(Rng& rng, int n) {
  Graph g = numbered(n);
  for (int v = 2; v <= n; ++v) g.add_edge(v, uniform(rng, 1, v - 1));
  return g;
}

Graph series_parallel(Rng& rng, int max_vertices) {
  Graph g = numbered(2);
  g.add_edge(1, 2);
  int target = uniform(rng, 2, std::max(2, max_vertices));
  while (static_cast<int>(g.num_vertices()) < target) {
    auto edges = g.edges();
    auto [u, v] = edges[uniform(rng, 0, static_cast<int>(edges.size()) - 1)];
    int w = static_cast<int>(g.num_vertices()) + 1;
    g.add_vertex(w);
    if (coin(rng, 0.5)) g.remove_edge(u, v);
    g.add_edge(u, w);
    g.add_edge(w, v);
  }
  return g;
}

std::uint64_t canonical_code(const Graph& g) {
  int n = static_cast<int>(g.num_vertices());
  const auto& verts = g.vertices();
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (int v : verts) {
    std::vector<int> key{static_cast<int>(g.neighbors(v).size())};
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(static_cast<int>(g.neighbors(w).size()));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(key, v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order;
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && keyed[j].first == keyed[i].first) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto& kv : keyed) order.push_back(kv.second);
  std::uint64_t best = ~std::uint64_t{0};
  auto code_of = [&]() {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << bit;
    return code | (static_cast<std::uint64_t>(n) << 58);
  };
  auto recurse = [&](auto&& self, std::size_t group) -> void {
    if (group == groups.size()) {
      best = std::min(best, code_of());
      return;
    }
    auto [a, b] = groups[group];
    std::sort(order.begin() + a, order.begin() + b);
    do {
      self(self, group + 1);
    } while (std::next_permutation(order.begin() + a, order.begin() + b));
  };
  recurse(recurse, 0);
  return best;
}

std::vector<Graph> connected_graphs(int n) {
  if (n <= 0) return {};
  if (n == 1) return {numbered(1)};
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  for (const Graph& base : connected_graphs(n - 1)) {
    for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
      Graph g = base;
      g.add_vertex(n);
      for (int v = 1; v < n; ++v)
        if (mask >> (v - 1) & 1) g.add_edge(v, n);
      if (seen.insert(canonical_code(g)).second) out.push_back(g);
    }
  }
  return out;
}

TreeDecomposition random_decomposition(Rng& rng, const Graph& g, bool noisy) {
  std::vector<int> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  TreeDecomposition t = guidepost::elimination_decomposition(g, order);
  if (!noisy || t.empty()) return t;
  int steps = uniform(rng, 1, 6);
  for (int s = 0; s < steps; ++s) {
    auto nodes = t.nodes();
    int x = nodes[uniform(rng, 0, static_cast<int>(nodes.size()) - 1)];
    int kind = uniform(rng, 0, 2);
    if (kind == 0) {
      // Redundant child carrying a subset of the bag.
      VertexSet sub;
      for (int v : t.bag(x))
        if (coin(rng, 0.6)) sub.push_back(v);
      t.add_node(t.max_node_id() + 1, sub.empty() ? t.bag(x) : sub, x);
    } else if (kind == 1 && t.parent(x) >= 0) {
      // Extend a parent vertex into the child, keeping occurrences connected.
      VertexSet bag = t.bag(x);
      for (int v : t.bag(t.parent(x)))
        if (coin(rng, 0.5)) bag.push_back(v);
      guidepost::vset::normalize(bag);
      t.set_bag(x, bag);
    } else {
      // Redundant parent above x.
      int p = t.parent(x);
      int y = t.max_node_id() + 1;
      t.add_node(y, t.bag(x), p);
      t.set_parent(x, y);
    }
  }
  return t;
}

TreeDecomposition random_path_decomposition(Rng& rng, const Graph& g) {
  std::vector<int> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexSet> bags;
  VertexSet placed;
  for (int v : order) {
    VertexSet bag{v};
    for (int u : placed)
      if (!guidepost::vset::subset(g.neighbors(u), placed)) bag.push_back(u);
    guidepost::vset::normalize(bag);
    bags.push_back(bag);
    guidepost::vset::insert(placed, v);
  }
  return guidepost::path_from_bags(bags);
}

guidepost::Network random_network(Rng& rng, int n, int max_edge) {
  guidepost::Network net;
  for (int v = 1; v <= n; ++v) net.hypergraph.vertices.push_back(v);
  auto random_edge = [&](int must) {
    VertexSet e{must};
    int size = uniform(rng, 1, max_edge);
    while (static_cast<int>(e.size()) < std::min(size, n)) guidepost::vset::insert(e, uniform(rng, 1, n));
    return e;
  };
  int extra = uniform(rng, 0, n);
  for (int i = 0; i < extra; ++i) net.hypergraph.edges.push_back({random_edge(uniform(rng, 1, n)), -1});
  for (;;) {
    auto comps = net.hypergraph.primal().components();
    if (comps.size() == 1) break;
    VertexSet e = random_edge(comps[0][uniform(rng, 0, static_cast<int>(comps[0].size()) - 1)]);
    guidepost::vset::insert(e, comps[1][uniform(rng, 0, static_cast<int>(comps[1].size()) - 1)]);
    net.hypergraph.edges.push_back({e, -1});
  }
  net.source = uniform(rng, 1, n);
  do net.sink = uniform(rng, 1, n);
  while (net.sink == net.source);
  return net;
}

guidepost::Hypergraph random_replacement(Rng& rng, const VertexSet& edge, int k, int first_fresh) {
  guidepost::Hypergraph h;
  h.vertices = edge;
  int fresh = uniform(rng, 0, std::max(0, k + 1 - static_cast<int>(edge.size())));
  for (int i = 0; i < fresh; ++i) h.vertices.push_back(first_fresh + i);
  guidepost::vset::normalize(h.vertices);
  int limit = std::max(k, 2);
  int nv = static_cast<int>(h.vertices.size());
  auto pick = [&]() { return h.vertices[uniform(rng, 0, nv - 1)]; };
  auto random_edge = [&](int must) {
    VertexSet e{must};
    int size = uniform(rng, 1, limit);
    while (static_cast<int>(e.size()) < std::min(size, nv)) guidepost::vset::insert(e, pick());
    return e;
  };
  int extra = uniform(rng, 0, nv);
  for (int i = 0; i < extra; ++i) h.edges.push_back({random_edge(pick()), -1});
  for (;;) {
    Graph primal = h.primal();
    auto comps = primal.components();
    if (comps.size() == 1) break;
    VertexSet e{comps[0][uniform(rng, 0, static_cast<int>(comps[0].size()) - 1)],
                comps[1][uniform(rng, 0, static_cast<int>(comps[1].size()) - 1)]};
    guidepost::vset::normalize(e);
    h.edges.push_back({e, -1});
  }
  return h;
}

guidepost::FiniteSemigroup random_semigroup(Rng& rng, int max_size) {
  for (;;) {
    int d = uniform(rng, 1, 4);
    int gens = uniform(rng, 1, 3);
    std::vector<std::vector<int>> elements;
    std::map<std::vector<int>, int> index;
    auto add = [&](const std::vector<int>& f) {
      if (index.emplace(f, static_cast<int>(elements.size())).second) elements.push_back(f);
    };
    std::vector<std::vector<int>> generators;
    for (int i = 0; i < gens; ++i) {
      std::vector<int> f(d);
      for (int& x : f) x = uniform(rng, 0, d - 1);
      generators.push_back(f);
      add(f);
    }
    bool too_big = false;
    for (std::size_t i = 0; i < elements.size() && !too_big; ++i)
      for (const auto& gf : generators) {
        std::vector<int> h(d);
        for (int x = 0; x < d; ++x) h[x] = gf[elements[i][x]];
        add(h);
        if (static_cast<int>(elements.size()) > max_size) {
          too_big = true;
          break;
        }
      }
    if (too_big) continue;
    int n = static_cast<int>(elements.size());
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> h(d);
        for (int x = 0; x < d; ++x) h[x] = elements[b][elements[a][x]];
        table[a * n + b] = index.at(h);
      }
    return guidepost::FiniteSemigroup(n, table);
  }
}

}  // namespace guidepost::gen
