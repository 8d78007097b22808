#include "guidepost/pathwidth.hpp"

#include <algorithm>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) { return a > kBudgetCap - b ? kBudgetCap : a + b; }

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kBudgetCap / b ? kBudgetCap : a * b;
}

std::int64_t pow2(int e) { return e >= 62 ? kBudgetCap : std::int64_t{1} << e; }

std::map<int, int> mapped(const std::map<int, int>& m, const std::map<int, int>& rename) {
  std::map<int, int> out;
  for (auto [i, v] : m) out[i] = rename.at(v);
  return out;
}

// Re-adds the vertices of add in ascending order, growing the host inside full.
Certificate add_back(Certificate c, const Graph& full, const VertexSet& add) {
  for (int u : add) {
    VertexSet verts = c.graph.vertices();
    vset::insert(verts, u);
    c = cert_add_vertex(c, full.induced(verts), u);
  }
  return c;
}

Certificate remove_all(Certificate c, const VertexSet& drop) {
  for (int u : drop)
    if (c.graph.has_vertex(u)) c = cert_remove_vertex(c, u);
  return c;
}

}  // namespace

std::int64_t leaf_budget(int k) { return k + 1; }

std::int64_t binary_budget(int k, std::int64_t child_max) { return sat_add(k, sat_mul(pow2(k), child_max)); }

std::int64_t unranked_budget(int k, std::int64_t child_max) {
  std::int64_t base = sat_mul(k, sat_add(sat_mul(4, sat_mul(k, k)), 5));
  return sat_add(base, sat_mul(pow2(3 * k), child_max));
}

bool PathwidthReport::within_budget() const {
  for (const auto& n : nodes)
    if (n.colors > n.budget) return false;
  return true;
}

ColumnStructure column_structure(const std::vector<BiInterfaceGraph>& letters) {
  GluedWord gw = glue_word(letters);
  ColumnStructure cols;
  cols.arity = gw.glued.arity;
  cols.graph = gw.glued.graph;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    VertexSet col;
    for (auto [v, w] : gw.columns[i]) col.push_back(w);
    vset::normalize(col);
    cols.columns.push_back(col);
    cols.left.push_back(mapped(letters[i].left, gw.columns[i]));
    cols.right.push_back(mapped(letters[i].right, gw.columns[i]));
  }
  return cols;
}

std::pair<GuidanceSystem, TreeColoring> locality_guidance(const ColumnStructure& cols, int period) {
  int k = cols.arity;
  int window = k * k;
  if (period <= 0) period = 2 * k * k + 2;
  int n = static_cast<int>(cols.columns.size());
  GuidanceSystem system;
  TreeColoring coloring;
  for (int i = 0; i < n; ++i) {
    VertexSet lv, rv;
    for (auto [idx, v] : cols.left[i]) lv.push_back(v);
    for (auto [idx, v] : cols.right[i]) rv.push_back(v);
    vset::normalize(lv);
    vset::normalize(rv);
    require(!vset::intersects(lv, rv), "left and right interfaces overlap in column " + std::to_string(i));
    VertexSet allowed;
    for (int j = std::max(0, i - window); j <= std::min(n - 1, i + window); ++j) allowed = vset::unite(allowed, cols.columns[j]);
    for (int side = 0; side < 2; ++side)
      for (auto [idx, v] : side == 0 ? cols.left[i] : cols.right[i]) {
        system.trees.push_back(bfs_tree(cols.graph, v, allowed));
        coloring.color.push_back((side * k + idx - 1) * period + i % period);
      }
  }
  return {system, compact_coloring(coloring)};
}

Certificate combine_binary(const Certificate& left, const Certificate& right, const BiInterfaceGraph& gl,
                           const BiInterfaceGraph& gr) {
  require(gl.arity == gr.arity, "combining letters of different arity");
  require(left.graph == gl.graph && right.graph == gr.graph, "certificates do not match their graphs");
  GlueResult glued = glue_with_map(gl, gr);
  Certificate r = relabel(right, glued.right_map);
  VertexSet fused;
  for (auto [i, y] : gr.left) {
    auto it = gl.right.find(i);
    if (it != gl.right.end()) fused.push_back(it->second);
  }
  vset::normalize(fused);
  Certificate joined = cert_disjoint_union(remove_all(left, fused), remove_all(r, fused));
  if (joined.graph.empty() && joined.decomposition.empty()) joined.captured = left.captured;
  return add_back(joined, glued.glued.graph, fused);
}

Certificate combine_unranked(const std::vector<Certificate>& certs, const std::vector<BiInterfaceGraph>& letters) {
  require(!letters.empty() && certs.size() == letters.size(), "one certificate per letter is required");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    require(letters[i].arity == letters.front().arity, "combining letters of different arity");
    require(certs[i].graph == letters[i].graph, "certificate " + std::to_string(i) + " does not match its letter");
  }
  if (letters.size() == 1) return certs.front();
  std::string shared = abstraction(letters.front()).key();
  for (const auto& l : letters) require(abstraction(l).key() == shared, "letters do not share one abstraction");

  ColumnStructure cols = column_structure(letters);
  GluedWord gw = glue_word(letters);
  std::size_t n = letters.size();
  // Vertices that are the same-index left and right interface of a letter.
  VertexSet both;
  for (std::size_t i = 0; i < n; ++i)
    for (auto [idx, v] : cols.left[i]) {
      auto it = cols.right[i].find(idx);
      if (it != cols.right[i].end() && it->second == v) both.push_back(v);
    }
  vset::normalize(both);

  ColumnStructure h;
  h.arity = cols.arity;
  h.graph = cols.graph.without(both);
  std::vector<Certificate> reduced;
  for (std::size_t i = 0; i < n; ++i) {
    h.columns.push_back(vset::minus(cols.columns[i], both));
    std::map<int, int> l, r;
    for (auto [idx, v] : cols.left[i])
      if (!vset::contains(both, v)) l[idx] = v;
    for (auto [idx, v] : cols.right[i])
      if (!vset::contains(both, v)) r[idx] = v;
    h.left.push_back(l);
    h.right.push_back(r);
    reduced.push_back(remove_all(relabel(certs[i], gw.columns[i]), both));
  }

  auto [local, local_colors] = locality_guidance(h);
  Certificate out;
  out.captured = CapturedFamily::Bags;
  out.graph = h.graph;
  out.guidance = local;
  out.coloring = local_colors;
  int offset = local_colors.color.empty() ? 0 : *std::max_element(local_colors.color.begin(), local_colors.color.end()) + 1;
  int next = 0;
  for (const auto& x : h.graph.components()) {
    int last_spine = -1;
    for (std::size_t i = 0; i < n; ++i) {
      VertexSet xi = vset::intersect(x, h.columns[i]);
      if (xi.empty()) continue;
      VertexSet yi;
      for (auto [idx, v] : h.left[i]) yi.push_back(v);
      for (auto [idx, v] : h.right[i]) yi.push_back(v);
      vset::normalize(yi);
      yi = vset::intersect(yi, x);
      Certificate ti = remove_all(restrict_certificate(reduced[i], xi), yi);
      int spine = -1;
      if (!yi.empty()) {
        spine = next++;
        out.decomposition.add_node(spine, yi, last_spine);
        last_spine = spine;
      }
      std::map<int, int> ids;
      for (int node : ti.decomposition.preorder()) {
        int p = ti.decomposition.parent(node);
        ids[node] = next;
        out.decomposition.add_node(next++, vset::unite(ti.decomposition.bag(node), yi), p < 0 ? spine : ids.at(p));
      }
      for (std::size_t t = 0; t < ti.guidance.trees.size(); ++t) {
        out.guidance.trees.push_back(ti.guidance.trees[t]);
        out.coloring.color.push_back(offset + ti.coloring.color[t]);
      }
    }
  }
  out.coloring = compact_coloring(out.coloring);
  return add_back(out, cols.graph, both);
}

Certificate certify_pathwidth(const Graph& g, const TreeDecomposition& p, PathwidthReport* report) {
  require_valid(g, p, "path decomposition");
  require(p.is_path_forest(), "decomposition is not a path decomposition");
  PathwidthReport local;
  PathwidthReport& rep = report ? *report : local;
  rep = PathwidthReport{};
  if (g.empty()) return Certificate{};
  Word word = path_decomposition_to_word(g, p);
  int k = word.arity;
  std::vector<Abstraction> abstractions;
  for (const auto& l : word.letters) abstractions.push_back(abstraction(l));
  AbstractionSemigroup sg = generated_semigroup(abstractions);
  Homomorphism h{sg.generators, &sg.semigroup};
  std::vector<int> letters_idx;
  for (std::size_t i = 0; i < word.letters.size(); ++i) letters_idx.push_back(static_cast<int>(i));
  FactorizationTree forest = factorize(letters_idx, h);
  auto problems = validate_tree(forest, letters_idx, h);
  ensure(problems.empty(), "factorization tree is invalid: " + (problems.empty() ? std::string() : problems.front()));

  rep.arity = k;
  rep.word_length = static_cast<int>(word.letters.size());
  rep.semigroup_size = sg.semigroup.size();
  rep.rank = rank(forest);
  rep.forest = forest;

  struct Built {
    Certificate cert;
    BiInterfaceGraph glued;
    std::int64_t budget;
  };
  auto build = [&](auto&& self, const FactorizationTree& node) -> Built {
    Built b;
    if (node.kind == FactorizationTree::Kind::Leaf) {
      b.glued = word.letters[node.begin];
      b.cert = leaf_certificate(b.glued.graph);
      b.budget = leaf_budget(k);
    } else {
      std::vector<Built> parts;
      std::int64_t child_max = 0;
      for (const auto& c : node.children) {
        parts.push_back(self(self, c));
        child_max = std::max(child_max, parts.back().budget);
      }
      if (node.kind == FactorizationTree::Kind::Binary) {
        b.cert = combine_binary(parts[0].cert, parts[1].cert, parts[0].glued, parts[1].glued);
        b.glued = glue(parts[0].glued, parts[1].glued);
        b.budget = binary_budget(k, child_max);
      } else {
        std::vector<Certificate> certs;
        std::vector<BiInterfaceGraph> gs;
        for (auto& part : parts) {
          certs.push_back(std::move(part.cert));
          gs.push_back(std::move(part.glued));
        }
        b.cert = combine_unranked(certs, gs);
        b.glued = glue_word(gs).glued;
        b.budget = unranked_budget(k, child_max);
      }
    }
    std::string span = "factorization node [" + std::to_string(node.begin) + "," + std::to_string(node.end) + ")";
    ensure(b.cert.graph == b.glued.graph, span + ": certificate host differs from the glued graph");
    ensure_certificate(b.cert, span);
    rep.nodes.push_back({node.begin, node.end, node.kind, b.budget, b.cert.colors(), width(b.cert.decomposition)});
    return b;
  };
  Built root = build(build, forest);
  ensure(root.glued.graph == g, "glued word differs from the input graph");
  Certificate out = std::move(root.cert);
  out.decomposition = renumber(sanitize(g, out.decomposition));
  ensure_certificate(out, "sanitized pathwidth certificate");
  rep.root_budget = root.budget;
  rep.root_colors = out.colors();
  return out;
}

}  // namespace guidepost
