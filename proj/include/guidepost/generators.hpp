#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"
#include "guidepost/networks.hpp"
#include "guidepost/semigroup.hpp"

namespace guidepost::gen {

using Rng = std::mt19937_64;

// Fuzz seed from GUIDEPOST_SEED, default 0.
std::uint64_t fuzz_seed();

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
Graph star_graph(int leaves);
// Spine of the given length with legs[i] pendant vertices on spine vertex i.
Graph caterpillar(const std::vector<int>& legs);
Graph random_graph(Rng& rng, int n, double p);
Graph random_connected_graph(Rng& rng, int n, double p);
Graph random_tree(Rng& rng, int n);
// Two-terminal series-parallel graph with at most max_vertices vertices.
Graph series_parallel(Rng& rng, int max_vertices);

// Canonical 64-bit code of a graph on vertices 1..n (n <= 8) under relabeling.
std::uint64_t canonical_code(const Graph& g);
// One representative per isomorphism class of connected graphs on exactly n vertices (n <= 8).
std::vector<Graph> connected_graphs(int n);

// Valid decomposition from a random elimination ordering, optionally padded with redundant
// nodes and extra vertices.
TreeDecomposition random_decomposition(Rng& rng, const Graph& g, bool noisy);
// Path decomposition from a random vertex ordering.
TreeDecomposition random_path_decomposition(Rng& rng, const Graph& g);

// Connected network on vertices 1..n with hyperedges of size 1..max_edge; source and sink differ.
guidepost::Network random_network(Rng& rng, int n, int max_edge);
// Connected hypergraph on edge plus fresh vertices from first_fresh, at most k+1 vertices in total,
// hyperedges of size at most max(k,2).
guidepost::Hypergraph random_replacement(Rng& rng, const VertexSet& edge, int k, int first_fresh);

// Random finite semigroup with at most max_size elements, from transformation closures.
guidepost::FiniteSemigroup random_semigroup(Rng& rng, int max_size);

}  // namespace guidepost::gen
