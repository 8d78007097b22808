#pragma once

#include <string>
#include <utility>
#include <vector>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"

namespace guidepost {

// Connected hypergraph with distinct source and sink.
struct Network {
  Hypergraph hypergraph;
  int source = -1;
  int sink = -1;
};

// Problems with the network itself; empty when well formed.
std::vector<std::string> network_problems(const Network& net);

// Alternating vertex/hyperedge sequence; edges[j] joins vertices[j] and vertices[j+1].
struct HyperPath {
  std::vector<int> vertices;
  std::vector<int> edges;
  bool operator==(const HyperPath& other) const { return vertices == other.vertices && edges == other.edges; }
};

// Problems with p as a source-to-target path of h; empty when it is a path.
std::vector<std::string> hyperpath_problems(const Hypergraph& h, const HyperPath& p, int from, int to);

struct CutedgeComponent {
  VertexSet vertices;
  bool bridge = false;
  // Bridge between elements index and index+1, or appendix of cutedge index (1-based).
  int index = 0;
};

struct CutedgeDecomposition {
  // Hyperedge indices in the order every source-sink path visits them.
  std::vector<int> cutedges;
  std::vector<CutedgeComponent> components;
  // bridges[i]: union of bridges between elements i and i+1, i = 0..p.
  std::vector<VertexSet> bridges;
  // appendices[i-1]: union of appendices of cutedge i, i = 1..p.
  std::vector<VertexSet> appendices;

  int size() const { return static_cast<int>(cutedges.size()); }
};

// Element i of the extended cutedge sequence: the source for 0, the sink for p+1, else cutedge i.
VertexSet cutedge_element(const Network& net, const CutedgeDecomposition& d, int i);

CutedgeDecomposition cutedge_decomposition(const Network& net);

// Two source-sink paths whose shared hyperedges are exactly the cutedges.
std::pair<HyperPath, HyperPath> two_disjoint_paths(const Network& net);
std::pair<HyperPath, HyperPath> two_disjoint_paths(const Network& net, const CutedgeDecomposition& d);

// Path decompositions (as bag sequences) of every bridge union and appendix union.
struct ThinnessWitness {
  int k = 0;
  std::vector<std::vector<VertexSet>> bridges;
  std::vector<std::vector<VertexSet>> appendices;
};

// Problems of a bag sequence as a path decomposition of h[within]; empty when valid.
std::vector<std::string> path_decomposition_problems(const Hypergraph& h, const VertexSet& within,
                                                     const std::vector<VertexSet>& bags);
std::vector<std::string> witness_problems(const Network& net, const ThinnessWitness& w);
// One bag per part; valid whenever every part is small enough.
ThinnessWitness single_bag_witness(const Network& net, int k);
// Concatenation of bridge and padded appendix decompositions; width at most 2k+1.
std::vector<VertexSet> thin_to_pathdecomp(const Network& net, const ThinnessWitness& w);

// Hypergraph with the hyperedge at edge_index replaced by the hyperedges of k_graph.
Hypergraph replace_hyperedge(const Hypergraph& h, int edge_index, const Hypergraph& k_graph);

// Replaces a cutedge by a small connected hypergraph and rebuilds the thinness witness by surgery.
// The new hypergraph keeps the surviving hyperedges in order, followed by those of k_graph.
std::pair<Network, ThinnessWitness> replace_cutedge(const Network& net, const ThinnessWitness& w, int edge_index,
                                                    const Hypergraph& k_graph);

struct LocalStep {
  std::vector<int> prefix;
  int cutedges = 0;
  // Node whose adhesion was expanded, or -1 on the final step.
  int expanded = -1;
  int width = -1;
};

struct LocalDecomposition {
  std::vector<int> prefix;
  Hypergraph torso;
  HyperPath first;
  HyperPath second;
  std::vector<VertexSet> path;
  std::vector<LocalStep> steps;
};

// Grows a prefix of a sane decomposition from its root until u and v are joined by two paths of the
// torso that share only graph edges; the torso keeps a path decomposition of width at most 2k+1.
LocalDecomposition local_decomp(const Graph& g, const TreeDecomposition& t, int u, int v);

}  // namespace guidepost
