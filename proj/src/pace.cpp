#include "guidepost/pace.hpp"

#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

// Next non-comment, non-blank line split into tokens; false at end of input.
bool next_line(std::istream& in, int& line_number, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream ss(line);
    tokens.clear();
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c") continue;
    return true;
  }
  return false;
}

long long to_int(const std::string& s, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
  if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
  return v;
}

}  // namespace

Graph read_gr(std::istream& in) {
  int line = 0;
  std::vector<std::string> tok;
  if (!next_line(in, line, tok)) throw ParseError("missing 'p tw' header", line);
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw") throw ParseError("malformed header, expected 'p tw <n> <m>'", line);
  long long n = to_int(tok[2], line);
  long long m = to_int(tok[3], line);
  if (n < 0 || m < 0) throw ParseError("negative counts in header", line);
  Graph g;
  for (long long v = 1; v <= n; ++v) g.add_vertex(static_cast<int>(v));
  long long seen = 0;
  while (next_line(in, line, tok)) {
    if (tok.size() != 2) throw ParseError("edge line must have two vertices", line);
    long long u = to_int(tok[0], line);
    long long v = to_int(tok[1], line);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint out of range", line);
    if (u == v) throw ParseError("self-loop", line);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m) throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen), line);
  return g;
}

void write_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.max_vertex() + (g.empty() ? 1 : 0) << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

TreeDecomposition read_td(std::istream& in) {
  int line = 0;
  std::vector<std::string> tok;
  if (!next_line(in, line, tok)) throw ParseError("missing 's td' header", line);
  if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") throw ParseError("malformed header, expected 's td <bags> <max> <n>'", line);
  long long nb = to_int(tok[2], line);
  long long maxbag = to_int(tok[3], line);
  long long n = to_int(tok[4], line);
  if (nb < 0 || maxbag < 0 || n < 0) throw ParseError("negative counts in header", line);
  std::map<int, VertexSet> bags;
  std::map<int, VertexSet> adj;
  while (next_line(in, line, tok)) {
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError("bag line without id", line);
      long long id = to_int(tok[1], line);
      if (id < 1 || id > nb) throw ParseError("bag id out of range", line);
      if (bags.count(static_cast<int>(id))) throw ParseError("duplicate bag id", line);
      VertexSet bag;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long v = to_int(tok[i], line);
        if (v < 1 || v > n) throw ParseError("bag vertex out of range", line);
        bag.push_back(static_cast<int>(v));
      }
      vset::normalize(bag);
      if (static_cast<long long>(bag.size()) > maxbag) throw ParseError("bag larger than announced maximum", line);
      bags[static_cast<int>(id)] = bag;
    } else {
      if (tok.size() != 2) throw ParseError("tree edge line must have two bag ids", line);
      long long x = to_int(tok[0], line);
      long long y = to_int(tok[1], line);
      if (x < 1 || x > nb || y < 1 || y > nb || x == y) throw ParseError("tree edge uses an invalid bag id", line);
      vset::insert(adj[static_cast<int>(x)], static_cast<int>(y));
      vset::insert(adj[static_cast<int>(y)], static_cast<int>(x));
    }
  }
  if (static_cast<long long>(bags.size()) != nb) throw ParseError("header announces " + std::to_string(nb) + " bags, found " + std::to_string(bags.size()), line);
  TreeDecomposition t;
  for (const auto& [id, bag] : bags) t.add_node(id, bag);
  std::set<int> seen;
  std::size_t edge_ends = 0;
  for (const auto& [id, nb_ids] : adj) edge_ends += nb_ids.size();
  for (const auto& [id, bag] : bags) {
    if (seen.count(id)) continue;
    seen.insert(id);
    std::deque<int> queue{id};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x]) {
        if (seen.count(y)) {
          if (t.parent(x) != y) {
            if (t.parent(y) != x) throw ParseError("tree edges contain a cycle", line);
          }
          continue;
        }
        seen.insert(y);
        t.set_parent(y, x);
        queue.push_back(y);
      }
    }
  }
  if (edge_ends / 2 + t.roots().size() != t.size()) throw ParseError("tree edges contain a cycle or duplicate", line);
  return t;
}

void write_td(std::ostream& out, const TreeDecomposition& t, int num_vertices, bool merge_forest) {
  std::map<int, int> ids;
  int next = 1;
  for (int x : t.nodes()) ids[x] = next++;
  auto roots = t.roots();
  bool extra = merge_forest && roots.size() > 1;
  int count = static_cast<int>(t.size()) + (extra ? 1 : 0);
  int maxbag = std::max(0, width(t) + 1);
  out << "s td " << count << ' ' << maxbag << ' ' << num_vertices << '\n';
  for (int x : t.nodes()) {
    out << "b " << ids[x];
    for (int v : t.bag(x)) out << ' ' << v;
    out << '\n';
  }
  if (extra) out << "b " << count << '\n';
  for (int x : t.nodes()) {
    int p = t.parent(x);
    if (p >= 0) out << ids[p] << ' ' << ids[x] << '\n';
  }
  if (extra)
    for (int r : roots) out << count << ' ' << ids[r] << '\n';
}

Graph read_gr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_gr(in);
}

TreeDecomposition read_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_td(in);
}

}  // namespace guidepost
