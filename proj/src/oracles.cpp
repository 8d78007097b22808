#include "guidepost/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

using Mask = std::uint32_t;

struct Indexed {
  std::vector<int> ids;
  std::vector<Mask> adj;
};

Indexed index_graph(const Graph& g) {
  if (static_cast<int>(g.num_vertices()) > kOracleVertexCap)
    throw ResourceLimitError("exact oracles are capped at " + std::to_string(kOracleVertexCap) + " vertices");
  Indexed ix;
  ix.ids = g.vertices();
  std::map<int, int> pos;
  for (std::size_t i = 0; i < ix.ids.size(); ++i) pos[ix.ids[i]] = static_cast<int>(i);
  ix.adj.assign(ix.ids.size(), 0);
  for (auto [u, v] : g.edges()) {
    ix.adj[pos[u]] |= Mask{1} << pos[v];
    ix.adj[pos[v]] |= Mask{1} << pos[u];
  }
  return ix;
}

// Vertices outside eliminated and v that v reaches through eliminated vertices.
Mask elimination_neighbors(const Indexed& ix, Mask eliminated, int v) {
  Mask seen = Mask{1} << v;
  Mask frontier = seen;
  Mask out = 0;
  while (frontier) {
    int x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask nb = ix.adj[x] & ~seen;
    seen |= nb;
    out |= nb & ~eliminated;
    frontier |= nb & eliminated;
  }
  return out;
}

Mask boundary_of(const Indexed& ix, Mask prefix) {
  Mask out = 0;
  for (Mask rest = prefix; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    if (ix.adj[x] & ~prefix) out |= Mask{1} << x;
  }
  return out;
}

}  // namespace

TreeDecomposition elimination_decomposition(const Graph& g, const std::vector<int>& order) {
  require(vset::make(order) == g.vertices() && order.size() == g.num_vertices(),
          "elimination ordering must list every vertex once");
  std::map<int, int> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  Graph fill = g;
  std::vector<VertexSet> bags(order.size());
  std::vector<int> parent(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    VertexSet later = fill.neighbors(v);
    bags[i] = later;
    vset::insert(bags[i], v);
    int first = -1;
    for (int w : later)
      if (first < 0 || position[w] < first) first = position[w];
    parent[i] = first;
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) fill.add_edge(later[a], later[b]);
    fill.remove_vertex(v);
  }
  TreeDecomposition t;
  for (std::size_t i = 0; i < order.size(); ++i) t.add_node(static_cast<int>(i), bags[i]);
  for (std::size_t i = 0; i < order.size(); ++i)
    if (parent[i] >= 0) t.set_parent(static_cast<int>(i), parent[i]);
  return t;
}

OracleResult exact_treewidth(const Graph& g) {
  Indexed ix = index_graph(g);
  int n = static_cast<int>(ix.ids.size());
  OracleResult r;
  if (n == 0) return r;
  Mask full = (Mask{1} << n) - 1;
  // best[S]: optimal width for eliminating the rest once S is eliminated.
  std::vector<int> best(std::size_t{1} << n, 0);
  best[full] = -1;
  for (Mask s = full; s-- > 0;) {
    int b = n;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      int q = std::popcount(elimination_neighbors(ix, s, v));
      b = std::min(b, std::max(q, best[s | Mask{1} << v]));
    }
    best[s] = b;
  }
  r.parameter = best[0];
  Mask s = 0;
  while (s != full) {
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      int q = std::popcount(elimination_neighbors(ix, s, v));
      if (std::max(q, best[s | Mask{1} << v]) == best[s]) {
        r.ordering.push_back(ix.ids[v]);
        s |= Mask{1} << v;
        break;
      }
    }
  }
  r.witness = elimination_decomposition(g, r.ordering);
  ensure(width(r.witness) == r.parameter, "treewidth witness width mismatch");
  return r;
}

OracleResult exact_pathwidth(const Graph& g) {
  Indexed ix = index_graph(g);
  int n = static_cast<int>(ix.ids.size());
  OracleResult r;
  if (n == 0) return r;
  Mask full = (Mask{1} << n) - 1;
  // best[S]: optimal vertex separation over the remaining prefixes once S is placed.
  std::vector<int> best(std::size_t{1} << n, 0);
  for (Mask s = full; s-- > 0;) {
    int b = n;
    for (int v = 0; v < n; ++v)
      if (!(s >> v & 1)) b = std::min(b, best[s | Mask{1} << v]);
    best[s] = std::max(b, std::popcount(boundary_of(ix, s)));
  }
  r.parameter = best[0];
  Mask s = 0;
  std::vector<VertexSet> bags;
  while (s != full) {
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      if (best[s | Mask{1} << v] <= best[s]) {
        VertexSet bag{ix.ids[v]};
        for (Mask rest = boundary_of(ix, s); rest; rest &= rest - 1) bag.push_back(ix.ids[std::countr_zero(rest)]);
        vset::normalize(bag);
        bags.push_back(bag);
        r.ordering.push_back(ix.ids[v]);
        s |= Mask{1} << v;
        break;
      }
    }
  }
  r.witness = path_from_bags(bags);
  ensure(width(r.witness) == r.parameter, "pathwidth witness width mismatch");
  return r;
}

int treewidth_by_search(const Graph& g) {
  Indexed ix = index_graph(g);
  int n = static_cast<int>(ix.ids.size());
  if (n == 0) return -1;
  // Upper bound from the min-degree heuristic on the explicit fill graph.
  int best = 0;
  {
    std::vector<Mask> adj = ix.adj;
    Mask alive = (Mask{1} << n) - 1;
    while (alive) {
      int pick = -1;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (pick < 0 || std::popcount(adj[v] & alive) < std::popcount(adj[pick] & alive)) pick = v;
      }
      Mask nb = adj[pick] & alive;
      best = std::max(best, std::popcount(nb));
      for (Mask rest = nb; rest; rest &= rest - 1) adj[std::countr_zero(rest)] |= nb & ~(Mask{1} << std::countr_zero(rest));
      alive &= ~(Mask{1} << pick);
    }
  }
  std::unordered_map<Mask, int> seen;
  std::function<void(std::vector<Mask>, Mask, int)> search = [&](std::vector<Mask> adj, Mask alive, int cur) {
    if (cur >= best) return;
    if (!alive) {
      best = cur;
      return;
    }
    auto it = seen.find(alive);
    if (it != seen.end() && it->second <= cur) return;
    seen[alive] = cur;
    int min_degree = n;
    for (Mask rest = alive; rest; rest &= rest - 1)
      min_degree = std::min(min_degree, std::popcount(adj[std::countr_zero(rest)] & alive));
    if (std::max(cur, min_degree) >= best) return;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      Mask nb = adj[v] & alive;
      int w = std::max(cur, std::popcount(nb));
      if (w >= best) continue;
      std::vector<Mask> next = adj;
      for (Mask r2 = nb; r2; r2 &= r2 - 1) {
        int x = std::countr_zero(r2);
        next[x] |= nb & ~(Mask{1} << x);
      }
      search(std::move(next), alive & ~(Mask{1} << v), w);
    }
  };
  search(ix.adj, (Mask{1} << n) - 1, 0);
  return best;
}

int pathwidth_by_search(const Graph& g) {
  Indexed ix = index_graph(g);
  int n = static_cast<int>(ix.ids.size());
  if (n == 0) return -1;
  int best = n;
  std::unordered_map<Mask, int> seen;
  Mask full = (Mask{1} << n) - 1;
  std::function<void(Mask, int)> search = [&](Mask placed, int cur) {
    cur = std::max(cur, std::popcount(boundary_of(ix, placed)));
    if (cur >= best) return;
    if (placed == full) {
      best = cur;
      return;
    }
    auto it = seen.find(placed);
    if (it != seen.end() && it->second <= cur) return;
    seen[placed] = cur;
    for (int v = 0; v < n; ++v)
      if (!(placed >> v & 1)) search(placed | Mask{1} << v, cur);
  };
  search(0, 0);
  return best;
}

int min_guidance_colors(const GuidanceSystem& system) {
  int m = static_cast<int>(system.trees.size());
  if (m > kColoringTreeCap)
    throw ResourceLimitError("exact coloring is capped at " + std::to_string(kColoringTreeCap) + " trees");
  if (m == 0) return 0;
  std::vector<VertexSet> verts;
  for (const auto& t : system.trees) verts.push_back(t.vertices());
  std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) conflict[i][j] = i != j && vset::intersects(verts[i], verts[j]);
  std::vector<int> color(m, -1);
  std::function<bool(int, int, int)> fits = [&](int i, int used, int limit) -> bool {
    if (i == m) return true;
    for (int c = 0; c < std::min(used + 1, limit); ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = !(conflict[i][j] && color[j] == c);
      if (!ok) continue;
      color[i] = c;
      if (fits(i + 1, std::max(used, c + 1), limit)) return true;
    }
    color[i] = -1;
    return false;
  };
  for (int limit = 1;; ++limit)
    if (fits(0, 0, limit)) return limit;
}

}  // namespace guidepost
