#pragma once

#include <iosfwd>
#include <string>

#include "guidepost/decomposition.hpp"
#include "guidepost/graph.hpp"

namespace guidepost {

// Reads a `.gr` graph; vertices are 1..n as in the file.
Graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);

// Reads a `.td` decomposition; node ids are the bag ids of the file, each tree rooted at its smallest id.
TreeDecomposition read_td(std::istream& in);
// Writes bags renumbered 1..N in ascending node order. With merge_forest, a forest of several
// trees is joined under an extra empty bag so the output is a single tree.
void write_td(std::ostream& out, const TreeDecomposition& t, int num_vertices, bool merge_forest = false);

Graph read_gr_file(const std::string& path);
TreeDecomposition read_td_file(const std::string& path);

}  // namespace guidepost
