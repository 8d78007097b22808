#pragma once

#include <map>
#include <string>
#include <vector>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"
#include "guidepost/semigroup.hpp"

namespace guidepost {

// Graph with partial injective left and right interface maps index -> vertex, indices 1..arity.
struct BiInterfaceGraph {
  int arity = 0;
  Graph graph;
  std::map<int, int> left;
  std::map<int, int> right;

  VertexSet left_vertices() const;
  VertexSet right_vertices() const;
  VertexSet interfaces() const;
  // Problems with the maps; empty when well formed.
  std::vector<std::string> problems() const;
  bool operator==(const BiInterfaceGraph& other) const {
    return arity == other.arity && graph == other.graph && left == other.left && right == other.right;
  }
};

struct GlueResult {
  BiInterfaceGraph glued;
  // Vertex of the right operand -> vertex of the result.
  std::map<int, int> right_map;
};

GlueResult glue_with_map(const BiInterfaceGraph& a, const BiInterfaceGraph& b);
BiInterfaceGraph glue(const BiInterfaceGraph& a, const BiInterfaceGraph& b);

struct Word {
  int arity = 0;
  std::vector<BiInterfaceGraph> letters;
};

struct GluedWord {
  BiInterfaceGraph glued;
  // Per letter: letter vertex -> result vertex.
  std::vector<std::map<int, int>> columns;
};

GluedWord glue_word(const std::vector<BiInterfaceGraph>& letters);

// Roles encode (side, index) as 2 * index + side with side 0 for left and 1 for right.
inline int role_code(bool right_side, int index) { return 2 * index + (right_side ? 1 : 0); }

struct Abstraction {
  int arity = 0;
  std::vector<std::vector<int>> role_sets;
  std::vector<Edge> edges;

  std::string key() const;
  bool operator==(const Abstraction& other) const { return key() == other.key(); }
};

Abstraction abstraction(const BiInterfaceGraph& g);
// Representative with vertices 0..m-1 in role-set order.
BiInterfaceGraph representative(const Abstraction& a);
Abstraction abstraction_product(const Abstraction& x, const Abstraction& y);
// Letter with left = right = identity on 1..k and no edges.
BiInterfaceGraph identity_letter(int arity);

inline constexpr int kSemigroupCap = 4000;

struct AbstractionSemigroup {
  std::vector<Abstraction> elements;
  std::map<std::string, int> index;
  FiniteSemigroup semigroup;
  // Element of each input letter, in input order.
  std::vector<int> generators;
};

// Closure of the letters under the product, with its multiplication table.
AbstractionSemigroup generated_semigroup(const std::vector<Abstraction>& letters);

// Bag sequence of a path decomposition with empty bags dropped and equal neighbors merged.
std::vector<VertexSet> normalized_bags(const TreeDecomposition& p);
Word path_decomposition_to_word(const Graph& g, const TreeDecomposition& p);
Word word_from_bags(const Graph& g, const std::vector<VertexSet>& bags);

}  // namespace guidepost
