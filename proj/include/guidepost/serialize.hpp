#pragma once

#include <json.hpp>
#include <string>

#include "guidepost/adhesion.hpp"
#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"
#include "guidepost/guidance.hpp"

namespace guidepost {

using Json = nlohmann::ordered_json;

// `.gr` text; vertices must be exactly 1..n.
std::string graph_text(const Graph& g);
// `.td` text of the decomposition renumbered in preorder, so each tree is rooted at its smallest bag id.
std::string decomposition_text(const TreeDecomposition& t, int num_vertices, bool merge_forest = false);
Graph graph_from_text(const std::string& text);
TreeDecomposition decomposition_from_text(const std::string& text);

// Parses JSON text; syntax errors become ParseError with the line of the offending byte.
Json parse_json(const std::string& text);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json encoding_to_json(const AdhesionEncoding& e);
AdhesionEncoding encoding_from_json(const Json& j);

// Decomposition forest as a DOT digraph, parent to child.
std::string decomposition_dot(const TreeDecomposition& t);
// Decomposition cluster plus guidance arcs, one edge class per color.
std::string certificate_dot(const Certificate& c);

}  // namespace guidepost
