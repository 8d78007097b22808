#include "guidepost/biinterface.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

VertexSet image(const std::map<int, int>& m) {
  VertexSet out;
  for (auto [i, v] : m) out.push_back(v);
  vset::normalize(out);
  return out;
}

}  // namespace

VertexSet BiInterfaceGraph::left_vertices() const { return image(left); }
VertexSet BiInterfaceGraph::right_vertices() const { return image(right); }
VertexSet BiInterfaceGraph::interfaces() const { return vset::unite(left_vertices(), right_vertices()); }

std::vector<std::string> BiInterfaceGraph::problems() const {
  std::vector<std::string> out;
  for (const auto* side : {&left, &right}) {
    std::map<int, int> inverse;
    for (auto [i, v] : *side) {
      if (i < 1 || i > arity) out.push_back("interface index " + std::to_string(i) + " outside 1.." + std::to_string(arity));
      if (!graph.has_vertex(v)) out.push_back("interface vertex " + std::to_string(v) + " not in graph");
      if (!inverse.emplace(v, i).second) out.push_back("interface map is not injective at vertex " + std::to_string(v));
    }
  }
  for (auto [i, v] : left)
    for (auto [j, w] : right)
      if (v == w && i != j)
        out.push_back("vertex " + std::to_string(v) + " is left " + std::to_string(i) + " and right " + std::to_string(j));
  return out;
}

GlueResult glue_with_map(const BiInterfaceGraph& a, const BiInterfaceGraph& b) {
  require(a.arity == b.arity, "gluing needs equal arities");
  GlueResult r;
  BiInterfaceGraph& out = r.glued;
  out.arity = a.arity;
  out.graph = a.graph;
  out.left = a.left;
  int fresh = std::max(a.graph.max_vertex(), b.graph.max_vertex()) + 1;
  for (auto [i, y] : b.left) {
    auto it = a.right.find(i);
    if (it != a.right.end()) r.right_map[y] = it->second;
  }
  for (int v : b.graph.vertices()) {
    if (r.right_map.count(v)) continue;
    r.right_map[v] = a.graph.has_vertex(v) ? fresh++ : v;
  }
  for (int v : b.graph.vertices()) out.graph.add_vertex(r.right_map[v]);
  for (auto [u, v] : b.graph.edges()) out.graph.add_edge(r.right_map[u], r.right_map[v]);
  for (auto [i, v] : b.right) out.right[i] = r.right_map[v];
  return r;
}

BiInterfaceGraph glue(const BiInterfaceGraph& a, const BiInterfaceGraph& b) { return glue_with_map(a, b).glued; }

GluedWord glue_word(const std::vector<BiInterfaceGraph>& letters) {
  require(!letters.empty(), "cannot glue an empty word");
  GluedWord w;
  w.glued = letters.front();
  std::map<int, int> first;
  for (int v : letters.front().graph.vertices()) first[v] = v;
  w.columns.push_back(std::move(first));
  for (std::size_t i = 1; i < letters.size(); ++i) {
    GlueResult r = glue_with_map(w.glued, letters[i]);
    w.glued = std::move(r.glued);
    w.columns.push_back(std::move(r.right_map));
  }
  return w;
}

std::string Abstraction::key() const {
  std::ostringstream out;
  out << arity << '|';
  for (const auto& rs : role_sets) {
    for (std::size_t i = 0; i < rs.size(); ++i) out << (i ? "," : "") << (rs[i] % 2 ? 'R' : 'L') << rs[i] / 2;
    out << ';';
  }
  out << '|';
  for (auto [a, b] : edges) out << a << '-' << b << ';';
  return out.str();
}

Abstraction abstraction(const BiInterfaceGraph& g) {
  std::map<int, std::vector<int>> roles;
  for (auto [i, v] : g.left) roles[v].push_back(role_code(false, i));
  for (auto [i, v] : g.right) roles[v].push_back(role_code(true, i));
  for (auto& [v, rs] : roles) std::sort(rs.begin(), rs.end());
  VertexSet iface = g.interfaces();
  std::vector<std::pair<std::vector<int>, int>> order;
  for (int v : iface) order.emplace_back(roles[v], v);
  std::sort(order.begin(), order.end());
  std::map<int, int> index;
  Abstraction a;
  a.arity = g.arity;
  for (const auto& [rs, v] : order) {
    index[v] = static_cast<int>(a.role_sets.size());
    a.role_sets.push_back(rs);
  }
  for (int s : iface) {
    VertexSet seen{s};
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : g.graph.neighbors(x)) {
        if (vset::contains(seen, y)) continue;
        vset::insert(seen, y);
        if (vset::contains(iface, y)) {
          int p = index[s], q = index[y];
          if (p < q) a.edges.emplace_back(p, q);
        } else {
          queue.push_back(y);
        }
      }
    }
  }
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  return a;
}

BiInterfaceGraph representative(const Abstraction& a) {
  BiInterfaceGraph g;
  g.arity = a.arity;
  for (std::size_t v = 0; v < a.role_sets.size(); ++v) {
    g.graph.add_vertex(static_cast<int>(v));
    for (int r : a.role_sets[v]) (r % 2 ? g.right : g.left)[r / 2] = static_cast<int>(v);
  }
  for (auto [u, v] : a.edges) g.graph.add_edge(u, v);
  return g;
}

Abstraction abstraction_product(const Abstraction& x, const Abstraction& y) {
  require(x.arity == y.arity, "product needs equal arities");
  return abstraction(glue(representative(x), representative(y)));
}

BiInterfaceGraph identity_letter(int arity) {
  BiInterfaceGraph g;
  g.arity = arity;
  for (int i = 1; i <= arity; ++i) {
    g.graph.add_vertex(i);
    g.left[i] = i;
    g.right[i] = i;
  }
  return g;
}

AbstractionSemigroup generated_semigroup(const std::vector<Abstraction>& letters) {
  require(!letters.empty(), "a generated semigroup needs at least one generator");
  AbstractionSemigroup out;
  std::vector<int> gens;  // distinct generator elements
  auto lookup = [&](const Abstraction& a) {
    require(a.arity == letters.front().arity, "generators need equal arities");
    auto [it, fresh] = out.index.emplace(a.key(), static_cast<int>(out.elements.size()));
    if (fresh) {
      if (static_cast<int>(out.elements.size()) >= kSemigroupCap)
        throw ResourceLimitError("generated semigroup exceeds " + std::to_string(kSemigroupCap) + " elements");
      out.elements.push_back(a);
    }
    return std::make_pair(it->second, fresh);
  };
  for (const auto& a : letters) {
    auto [id, fresh] = lookup(a);
    out.generators.push_back(id);
    if (fresh) gens.push_back(id);
  }
  // Right Cayley graph by the generators; each new element remembers (prefix, generator).
  std::vector<std::vector<int>> right;
  std::vector<std::pair<int, int>> origin(out.elements.size(), {-1, -1});
  for (std::size_t e = 0; e < out.elements.size(); ++e) {
    right.emplace_back();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto [id, fresh] = lookup(abstraction_product(out.elements[e], out.elements[gens[g]]));
      if (fresh) origin.emplace_back(static_cast<int>(e), static_cast<int>(g));
      right[e].push_back(id);
    }
  }
  int n = static_cast<int>(out.elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> gen_slot(n, -1);
  for (std::size_t g = 0; g < gens.size(); ++g) gen_slot[gens[g]] = static_cast<int>(g);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      int v;
      if (gen_slot[b] >= 0) v = right[a][gen_slot[b]];
      else v = right[table[static_cast<std::size_t>(a) * n + origin[b].first]][origin[b].second];
      table[static_cast<std::size_t>(a) * n + b] = v;
    }
  out.semigroup = FiniteSemigroup(n, std::move(table));
  return out;
}

std::vector<VertexSet> normalized_bags(const TreeDecomposition& p) {
  std::vector<VertexSet> out;
  for (auto& bag : bag_sequence(p)) {
    if (bag.empty() || (!out.empty() && out.back() == bag)) continue;
    out.push_back(bag);
  }
  return out;
}

Word word_from_bags(const Graph& g, const std::vector<VertexSet>& bags) {
  Word w;
  for (const auto& bag : bags) w.arity = std::max(w.arity, static_cast<int>(bag.size()) - 1);
  std::map<int, int> incoming;  // index -> vertex, right names of the previous letter
  for (std::size_t i = 0; i < bags.size(); ++i) {
    BiInterfaceGraph letter;
    letter.arity = w.arity;
    letter.graph = g.induced(bags[i]);
    letter.left = incoming;
    if (i + 1 < bags.size()) {
      VertexSet shared = vset::intersect(bags[i], bags[i + 1]);
      ensure(static_cast<int>(shared.size()) <= w.arity, "adhesion larger than the arity");
      std::map<int, int> by_vertex;
      for (auto [idx, v] : incoming) by_vertex[v] = idx;
      std::vector<bool> used(w.arity + 1, false);
      for (int v : shared) {
        auto it = by_vertex.find(v);
        if (it == by_vertex.end()) continue;
        letter.right[it->second] = v;
        used[it->second] = true;
      }
      for (int v : shared) {
        if (by_vertex.count(v)) continue;
        int idx = 1;
        while (idx <= w.arity && used[idx]) ++idx;
        ensure(idx <= w.arity, "no free interface index");
        letter.right[idx] = v;
        used[idx] = true;
      }
    }
    incoming = letter.right;
    w.letters.push_back(std::move(letter));
  }
  return w;
}

Word path_decomposition_to_word(const Graph& g, const TreeDecomposition& p) {
  require_valid(g, p, "path decomposition");
  require(p.is_path_forest(), "decomposition is not a path decomposition");
  return word_from_bags(g, normalized_bags(p));
}

}  // namespace guidepost
