#pragma once

#include <string>
#include <vector>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"

namespace guidepost {

// Margin spanning forests, one connector edge per non-root node, one representative per root.
struct AdhesionEncoding {
  std::vector<Edge> margin_edges;
  std::vector<Edge> connectors;
  VertexSet roots;
  bool operator==(const AdhesionEncoding& other) const {
    return margin_edges == other.margin_edges && connectors == other.connectors && roots == other.roots;
  }
};

// g with every adhesion of t turned into a clique.
Graph clique_adhesions(const Graph& g, const TreeDecomposition& t);

// Encoding of a sane decomposition; every choice takes the smallest id.
AdhesionEncoding encode(const Graph& g, const TreeDecomposition& t);
// Same construction without the saneness requirement; throws only when a choice is impossible.
AdhesionEncoding encode_unchecked(const Graph& g, const TreeDecomposition& t);

// Problems with an encoding over the cliqued graph h; empty when well formed.
std::vector<std::string> encoding_problems(const Graph& h, const AdhesionEncoding& e);
// Decomposition with one node per margin component, node ids in preorder.
TreeDecomposition decode(const Graph& h, const AdhesionEncoding& e);

// Whether two decompositions have the same margins, bags and parent margins, ignoring node ids.
bool same_up_to_ids(const TreeDecomposition& a, const TreeDecomposition& b);

}  // namespace guidepost
