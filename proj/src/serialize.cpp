#include "guidepost/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "guidepost/error.hpp"
#include "guidepost/pace.hpp"

namespace guidepost {

namespace {

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

ParseError shape_error(const std::string& what) { return ParseError(what, 0); }

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw shape_error(what + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw shape_error(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Edge> edge_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw shape_error(what + " must be an array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw shape_error(what + " entries must be pairs");
    out.emplace_back(as_int(e[0], what), as_int(e[1], what));
  }
  return out;
}

Json edge_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

std::string bag_label(const VertexSet& bag) {
  std::string s;
  for (int v : bag) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

void write_forest(std::ostream& out, const TreeDecomposition& t, const std::string& indent) {
  for (int x : t.nodes()) out << indent << "b" << x << " [shape=box, label=\"" << bag_label(t.bag(x)) << "\"];\n";
  for (int x : t.nodes())
    if (t.parent(x) >= 0) out << indent << "b" << t.parent(x) << " -> b" << x << ";\n";
}

}  // namespace

std::string graph_text(const Graph& g) {
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    require(g.vertices()[i] == static_cast<int>(i) + 1, "graph vertices must be 1..n");
  std::ostringstream out;
  write_gr(out, g);
  return out.str();
}

std::string decomposition_text(const TreeDecomposition& t, int num_vertices, bool merge_forest) {
  std::ostringstream out;
  write_td(out, renumber(t), num_vertices, merge_forest);
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_gr(in);
}

TreeDecomposition decomposition_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_td(in);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t end = std::min(e.byte, text.size());
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
    throw ParseError("invalid JSON", line);
  }
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["graph"] = graph_text(c.graph);
  j["decomposition"] = decomposition_text(c.decomposition, c.graph.max_vertex() < 0 ? 0 : c.graph.max_vertex());
  Json trees = Json::array();
  for (const auto& tree : c.guidance.trees) {
    Json tj;
    tj["root"] = tree.root;
    tj["arcs"] = edge_json(tree.arcs);
    trees.push_back(tj);
  }
  j["trees"] = trees;
  j["colors"] = c.coloring.color;
  j["captured"] = c.captured == CapturedFamily::Bags ? "bags" : "adhesions";
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw shape_error("certificate must be an object");
  Certificate c;
  const Json& g = field(j, "graph");
  const Json& t = field(j, "decomposition");
  if (!g.is_string() || !t.is_string()) throw shape_error("graph and decomposition must be strings");
  c.graph = graph_from_text(g.get<std::string>());
  c.decomposition = decomposition_from_text(t.get<std::string>());
  const Json& trees = field(j, "trees");
  if (!trees.is_array()) throw shape_error("trees must be an array");
  for (const auto& tj : trees) {
    if (!tj.is_object()) throw shape_error("tree must be an object");
    GuidedTree tree;
    tree.root = as_int(field(tj, "root"), "root");
    tree.arcs = edge_list(field(tj, "arcs"), "arcs");
    c.guidance.trees.push_back(std::move(tree));
  }
  const Json& colors = field(j, "colors");
  if (!colors.is_array()) throw shape_error("colors must be an array");
  for (const auto& x : colors) c.coloring.color.push_back(as_int(x, "color"));
  if (c.coloring.color.size() != c.guidance.trees.size()) throw shape_error("colors and trees differ in length");
  const Json& captured = field(j, "captured");
  if (captured == "bags")
    c.captured = CapturedFamily::Bags;
  else if (captured == "adhesions")
    c.captured = CapturedFamily::Adhesions;
  else
    throw shape_error("captured must be \"bags\" or \"adhesions\"");
  return c;
}

Json encoding_to_json(const AdhesionEncoding& e) {
  Json j;
  j["M"] = edge_json(e.margin_edges);
  j["K"] = edge_json(e.connectors);
  j["R"] = e.roots;
  return j;
}

AdhesionEncoding encoding_from_json(const Json& j) {
  if (!j.is_object()) throw shape_error("encoding must be an object");
  AdhesionEncoding e;
  e.margin_edges = edge_list(field(j, "M"), "M");
  e.connectors = edge_list(field(j, "K"), "K");
  const Json& r = field(j, "R");
  if (!r.is_array()) throw shape_error("R must be an array");
  for (const auto& v : r) e.roots.push_back(as_int(v, "R"));
  vset::normalize(e.roots);
  return e;
}

std::string decomposition_dot(const TreeDecomposition& t) {
  std::ostringstream out;
  out << "digraph decomposition {\n";
  write_forest(out, t, "  ");
  out << "}\n";
  return out.str();
}

std::string certificate_dot(const Certificate& c) {
  std::ostringstream out;
  out << "digraph certificate {\n";
  out << "  subgraph cluster_decomposition {\n";
  out << "    label=\"decomposition\";\n";
  write_forest(out, c.decomposition, "    ");
  out << "  }\n";
  for (int v : c.graph.vertices()) out << "  v" << v << " [label=\"" << v << "\"];\n";
  for (auto [u, v] : c.graph.edges()) out << "  v" << u << " -> v" << v << " [dir=none, style=dotted];\n";
  for (std::size_t i = 0; i < c.guidance.trees.size(); ++i) {
    int color = i < c.coloring.color.size() ? c.coloring.color[i] : 0;
    const char* hue = kPalette[static_cast<std::size_t>(std::max(color, 0)) % std::size(kPalette)];
    const auto& tree = c.guidance.trees[i];
    out << "  v" << tree.root << " [peripheries=2];\n";
    for (auto [child, parent] : tree.arcs)
      out << "  v" << child << " -> v" << parent << " [class=\"color" << color << "\", color=\"" << hue
          << "\", label=\"t" << i << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace guidepost
