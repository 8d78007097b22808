#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "generators.hpp"
#include "guidepost/adhesion.hpp"
#include "guidepost/error.hpp"
#include "guidepost/factorization.hpp"
#include "guidepost/guidance.hpp"
#include "guidepost/networks.hpp"
#include "guidepost/oracles.hpp"
#include "guidepost/pathwidth.hpp"
#include "guidepost/treewidth.hpp"

using namespace guidepost;
using namespace testgen;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kCorpusSeconds = 600.0;
constexpr double kFactorizationSeconds = 60.0;
constexpr int kCrossCheckGraphs = 2000;
constexpr int kCrossCheckMaxVertices = 9;
constexpr int kFactorizationInstances = 1000;
constexpr int kFactorizationMaxSemigroup = 6;
constexpr int kFactorizationMaxWord = 300;
constexpr int kStructuredMaxVertices = 30;
constexpr int kSeriesParallelInstances = 200;
constexpr int kSeriesParallelMaxVertices = 12;
constexpr int kNetworks = 200;
constexpr int kNetworkMaxVertices = 8;
constexpr int kReplacements = 500;
constexpr int kCertificateOps = 1000;
constexpr int kRoundTrips = 500;
constexpr int kRoundTripMaxVertices = 9;
constexpr int kSanitizeRuns = 1000;
constexpr int kFuzzIterations = 20;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
struct Failures {
  int count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (count == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(count) + " failures, first: " + first};
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Graph relabeled_from_one(const Graph& g) {
  std::map<int, int> id;
  for (int v : g.vertices()) id[v] = static_cast<int>(id.size()) + 1;
  Graph out;
  for (auto [v, i] : id) out.add_vertex(i);
  for (auto [u, v] : g.edges()) out.add_edge(id[u], id[v]);
  return out;
}

// 1. Every connected graph on at most seven vertices.
Outcome validity_corpus() {
  // Connected graphs on n unlabeled vertices, n = 1..7.
  const int expected_counts[] = {1, 1, 2, 6, 21, 112, 853};
  auto start = std::chrono::steady_clock::now();
  Failures f;
  int total = 0;
  for (int n = 1; n <= 7; ++n) {
    auto graphs = connected_graphs(n);
    if (static_cast<int>(graphs.size()) != expected_counts[n - 1])
      f.add("n=" + std::to_string(n) + " enumerated " + std::to_string(graphs.size()) + " graphs");
    for (const Graph& g : graphs) {
      ++total;
      PipelineResult r = full_pipeline(g);
      ValidationReport v = validate_decomposition(g, r.decomposition);
      if (!v.ok()) f.add("invalid output: " + v.describe());
      if (r.report.final_width > r.report.width_bound) f.add("width above audit bound");
      if (!r.report.budgets_ok) f.add("color budget exceeded");
    }
  }
  double secs = seconds_since(start);
  if (secs > kCorpusSeconds) f.add("runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << total << " graphs (853 on exactly 7 vertices), " << secs << " s";
  return f.outcome(s.str());
}

// 2. Both exact methods agree, and reproduce known families.
Outcome oracle_cross_check() {
  Rng rng(fuzz_seed() + 101);
  Failures f;
  for (int i = 0; i < kCrossCheckGraphs; ++i) {
    Graph g = random_graph(rng, uniform(rng, 1, kCrossCheckMaxVertices), std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    int tw = exact_treewidth(g).parameter;
    int pw = exact_pathwidth(g).parameter;
    if (tw != treewidth_by_search(g)) f.add("treewidth disagreement on graph " + std::to_string(i));
    if (pw != pathwidth_by_search(g)) f.add("pathwidth disagreement on graph " + std::to_string(i));
  }
  for (int n = 1; n <= 9; ++n) {
    Graph k = complete_graph(n);
    if (exact_treewidth(k).parameter != n - 1 || treewidth_by_search(k) != n - 1) f.add("K" + std::to_string(n));
  }
  for (int n = 3; n <= 12; ++n) {
    Graph c = cycle_graph(n);
    if (exact_treewidth(c).parameter != 2 || treewidth_by_search(c) != 2) f.add("C" + std::to_string(n));
  }
  for (int i = 0; i < 50; ++i) {
    Graph t = random_tree(rng, uniform(rng, 2, 12));
    if (exact_treewidth(t).parameter != 1 || treewidth_by_search(t) != 1) f.add("tree " + std::to_string(i));
  }
  Graph grid = grid_graph(3, 3);
  if (exact_treewidth(grid).parameter != 3 || treewidth_by_search(grid) != 3) f.add("3x3 grid");
  return f.outcome(std::to_string(kCrossCheckGraphs) + " random graphs plus complete, cycle, tree and grid families");
}

// 3. Factorization forests of rank at most 3|S|.
Outcome factorization_bound() {
  Rng rng(fuzz_seed() + 102);
  auto start = std::chrono::steady_clock::now();
  Failures f;
  int max_rank = 0;
  for (int i = 0; i < kFactorizationInstances; ++i) {
    FiniteSemigroup s = random_semigroup(rng, kFactorizationMaxSemigroup);
    Homomorphism h;
    h.semigroup = &s;
    int letters = uniform(rng, 1, 4);
    for (int a = 0; a < letters; ++a) h.image.push_back(uniform(rng, 0, s.size() - 1));
    std::vector<int> word(static_cast<std::size_t>(uniform(rng, 1, kFactorizationMaxWord)));
    for (int& a : word) a = uniform(rng, 0, letters - 1);
    FactorizationTree t = factorize(word, h);
    auto problems = validate_tree(t, word, h);
    if (!problems.empty()) f.add(problems.front());
    if (rank(t) > 3 * s.size()) f.add("rank " + std::to_string(rank(t)) + " above 3|S| = " + std::to_string(3 * s.size()));
    max_rank = std::max(max_rank, rank(t));
  }
  double secs = seconds_since(start);
  if (secs > kFactorizationSeconds) f.add("runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << kFactorizationInstances << " instances, max rank " << max_rank << ", " << secs << " s";
  return f.outcome(s.str());
}

// 4. Pathwidth certificates within budget at every factorization node.
Outcome pathwidth_pipeline() {
  std::vector<std::pair<Graph, TreeDecomposition>> cases;
  for (int n = 2; n <= kStructuredMaxVertices; ++n) {
    std::vector<VertexSet> bags;
    for (int v = 1; v < n; ++v) bags.push_back({v, v + 1});
    cases.emplace_back(path_graph(n), path_from_bags(bags));
  }
  for (int n = 3; n <= kStructuredMaxVertices; ++n) {
    std::vector<VertexSet> bags;
    for (int v = 2; v < n; ++v) bags.push_back({1, v, v + 1});
    cases.emplace_back(cycle_graph(n), path_from_bags(bags));
  }
  Rng rng(fuzz_seed() + 103);
  for (int i = 0; i < 20; ++i) {
    std::vector<int> legs(static_cast<std::size_t>(uniform(rng, 1, 8)));
    for (int& l : legs) l = uniform(rng, 0, 2);
    Graph g = caterpillar(legs);
    if (static_cast<int>(g.num_vertices()) > kStructuredMaxVertices) continue;
    std::vector<VertexSet> bags;
    int spine = static_cast<int>(legs.size());
    for (int v = 1; v <= spine; ++v) {
      for (int w : g.neighbors(v))
        if (w > spine) bags.push_back({v, w});
      if (v < spine) bags.push_back({v, v + 1});
    }
    if (bags.empty()) bags.push_back({1});
    cases.emplace_back(g, path_from_bags(bags));
  }
  int small = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      OracleResult pw = exact_pathwidth(g);
      if (pw.parameter > 2) continue;
      cases.emplace_back(g, pw.witness);
      ++small;
    }
  Failures f;
  int max_colors = 0;
  for (const auto& [g, p] : cases) {
    if (!validate_decomposition(g, p).ok() || width(p) > 2 || !p.is_path_forest()) {
      f.add("bad input path decomposition");
      continue;
    }
    PathwidthReport report;
    Certificate c = certify_pathwidth(g, p, &report);
    CertificateReport cr = verify_certificate(c);
    if (!cr.ok()) f.add(cr.describe());
    if (c.captured != CapturedFamily::Bags) f.add("certificate does not capture bags");
    for (const auto& node : report.nodes)
      if (node.colors > node.budget) f.add("node over budget");
    max_colors = std::max(max_colors, c.colors());
  }
  std::ostringstream s;
  s << cases.size() << " graphs (" << small << " small connected), max colors " << max_colors;
  return f.outcome(s.str());
}

// 5. Cycle certificates.
Outcome cycle_construction() {
  Failures f;
  for (int n = 4; n <= 100; n += 2) {
    Certificate c = cycle_certificate(n);
    std::set<int> used(c.coloring.color.begin(), c.coloring.color.end());
    if (used.size() != 3) f.add("C" + std::to_string(n) + " uses " + std::to_string(used.size()) + " colors");
    if (!captures(c.graph, c.guidance, captured_sets(c.decomposition, CapturedFamily::Bags)).ok()) f.add("C" + std::to_string(n) + " misses a bag");
    if (!verify_certificate(c).ok()) f.add("C" + std::to_string(n) + ": " + verify_certificate(c).describe());
  }
  return f.outcome("even n from 4 to 100");
}

// 6. Routing and coloring bounds on series-parallel graphs.
Outcome treewidth_bounds() {
  Rng rng(fuzz_seed() + 106);
  Failures f;
  int done = 0, worst_width = -1, worst_colors = 0, worst_load = 0, worst_budget = 0;
  while (done < kSeriesParallelInstances) {
    Graph g = relabeled_from_one(series_parallel(rng, kSeriesParallelMaxVertices));
    if (!g.connected() || g.num_vertices() < 2) continue;
    int tw = exact_treewidth(g).parameter;
    if (tw > 2) {
      f.add("generator produced treewidth " + std::to_string(tw));
      continue;
    }
    ++done;
    LowPathwidthResult low = low_pw_decomp(g);
    for (const auto& [x, pd] : low.marginal_paths) worst_width = std::max(worst_width, width(pd));
    worst_colors = std::max(worst_colors, low.conflicts.colors);
    worst_load = std::max(worst_load, low.audit.max_load);
    worst_budget = std::max(worst_budget, low.audit.max_budget);
    if (low.audit.max_marginal_width > 5) f.add("marginal pathwidth " + std::to_string(low.audit.max_marginal_width));
    if (low.conflicts.colors > 36) f.add("conflict colors " + std::to_string(low.conflicts.colors));
    if (low.audit.max_load > 16) f.add("load " + std::to_string(low.audit.max_load));
    if (low.audit.max_budget > 16) f.add("routing budget " + std::to_string(low.audit.max_budget));
    if (!verify_certificate(low.adhesion_certificate).ok()) f.add("adhesion certificate fails");
    TreeDecomposition t = renumber(sanitize(g, exact_treewidth(g).witness));
    RoutingResult r = route_families(g, t);
    auto problems = routing_problems(g, t, r);
    if (!problems.empty()) f.add(problems.front());
  }
  std::ostringstream s;
  s << done << " graphs, max marginal pathwidth " << worst_width << " (bound 5), max conflict colors " << worst_colors
    << " (bound 36), max load " << worst_load << " (bound 16), max routing budget " << worst_budget << " (bound 16)";
  return f.outcome(s.str());
}

// Hyperedge index sets of all simple source-sink hyperpaths.
std::vector<std::set<int>> all_path_edge_sets(const Network& net) {
  const Hypergraph& h = net.hypergraph;
  std::vector<std::set<int>> out;
  std::set<int> on_path{net.source};
  std::set<int> used;
  std::function<void(int)> dfs = [&](int x) {
    if (x == net.sink) {
      out.push_back(used);
      return;
    }
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
      if (used.count(e) || !vset::contains(h.edges[e].vertices, x)) continue;
      used.insert(e);
      for (int y : h.edges[e].vertices) {
        if (on_path.count(y)) continue;
        on_path.insert(y);
        dfs(y);
        on_path.erase(y);
      }
      used.erase(e);
    }
  };
  dfs(net.source);
  return out;
}

// 7. Shared hyperedges of the two paths are exactly the cutedges.
Outcome disjoint_paths_cutedges() {
  Rng rng(fuzz_seed() + 107);
  Failures f;
  for (int i = 0; i < kNetworks; ++i) {
    Network net = random_network(rng, uniform(rng, 2, kNetworkMaxVertices), 3);
    auto paths = all_path_edge_sets(net);
    std::set<int> cut = paths.empty() ? std::set<int>{} : paths.front();
    for (const auto& p : paths) {
      std::set<int> keep;
      for (int e : cut)
        if (p.count(e)) keep.insert(e);
      cut = keep;
    }
    auto d = cutedge_decomposition(net);
    if (std::set<int>(d.cutedges.begin(), d.cutedges.end()) != cut) f.add("cutedge set differs on network " + std::to_string(i));
    auto [a, b] = two_disjoint_paths(net, d);
    if (!hyperpath_problems(net.hypergraph, a, net.source, net.sink).empty() ||
        !hyperpath_problems(net.hypergraph, b, net.source, net.sink).empty())
      f.add("invalid path on network " + std::to_string(i));
    std::set<int> shared;
    std::set<int> in_a(a.edges.begin(), a.edges.end());
    for (int e : b.edges)
      if (in_a.count(e)) shared.insert(e);
    if (shared != cut) f.add("shared hyperedges differ on network " + std::to_string(i));
  }
  return f.outcome(std::to_string(kNetworks) + " networks");
}

// 8. Cutedge replacement keeps thinness.
Outcome thinness_surgery() {
  Rng rng(fuzz_seed() + 108);
  Failures f;
  int done = 0, max_width = -1;
  while (done < kReplacements) {
    int k = uniform(rng, 1, 2);
    Network net = random_network(rng, uniform(rng, 2, 7), k + 1);
    ThinnessWitness w = single_bag_witness(net, k);
    if (!witness_problems(net, w).empty()) continue;
    for (int step = 0; step < 3 && done < kReplacements; ++step) {
      auto d = cutedge_decomposition(net);
      if (d.cutedges.empty()) break;
      int e = d.cutedges[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(d.cutedges.size()) - 1))];
      if (static_cast<int>(net.hypergraph.edges[e].vertices.size()) > std::max(k, 2)) break;
      Hypergraph rep = random_replacement(rng, net.hypergraph.edges[e].vertices, k, net.hypergraph.vertices.back() + 1);
      std::tie(net, w) = replace_cutedge(net, w, e, rep);
      ++done;
      auto problems = witness_problems(net, w);
      if (!problems.empty()) f.add(problems.front());
      auto bags = thin_to_pathdecomp(net, w);
      if (!path_decomposition_problems(net.hypergraph, net.hypergraph.vertices, bags).empty()) f.add("invalid path decomposition");
      int wd = -1;
      for (const auto& b : bags) wd = std::max(wd, static_cast<int>(b.size()) - 1);
      if (wd > 2 * k + 1) f.add("width " + std::to_string(wd) + " above 2k+1");
      max_width = std::max(max_width, wd);
    }
  }
  return f.outcome(std::to_string(done) + " replacements, max path width " + std::to_string(max_width));
}

// 9. Certificate algebra.
Outcome certificate_algebra() {
  Rng rng(fuzz_seed() + 109);
  Failures f;
  for (int i = 0; i < kCertificateOps; ++i) {
    Graph g = random_graph(rng, uniform(rng, 2, 8), 0.4);
    Certificate base = leaf_certificate(g.without(g.vertices().back()));
    int before = base.colors();
    Certificate added = cert_add_vertex(base, g, g.vertices().back());
    if (!verify_certificate(added).ok()) f.add("add: " + verify_certificate(added).describe());
    if (added.colors() > before + 1) f.add("add used " + std::to_string(added.colors()) + " colors from " + std::to_string(before));

    int u = g.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.num_vertices()) - 1))];
    Certificate removed = cert_remove_vertex(added, u);
    if (!verify_certificate(removed).ok()) f.add("remove: " + verify_certificate(removed).describe());
    if (removed.colors() > 2 * added.colors()) f.add("remove more than doubled the colors");

    Certificate raw = leaf_certificate(random_graph(rng, uniform(rng, 1, 6), 0.5));
    std::map<int, int> shift;
    for (int v : raw.graph.vertices()) shift[v] = v + 100;
    Certificate other = relabel(raw, shift);
    Certificate joined = cert_disjoint_union(added, other);
    if (!verify_certificate(joined).ok()) f.add("union: " + verify_certificate(joined).describe());
    if (joined.colors() != std::max(added.colors(), other.colors())) f.add("union color count differs from the maximum");
  }
  return f.outcome(std::to_string(kCertificateOps) + " applications of each operation");
}

// 10. Encoding round trip and its failure on a non-sane input.
Outcome encoding_round_trip() {
  Rng rng(fuzz_seed() + 110);
  Failures f;
  for (int i = 0; i < kRoundTrips; ++i) {
    Graph g = random_graph(rng, uniform(rng, 1, kRoundTripMaxVertices), 0.35);
    TreeDecomposition t = sanitize(g, random_decomposition(rng, g, coin(rng, 0.5)));
    AdhesionEncoding e = encode(g, t);
    Graph h = clique_adhesions(g, t);
    if (!encoding_problems(h, e).empty()) f.add("malformed encoding");
    TreeDecomposition back = decode(h, e);
    if (!same_up_to_ids(back, t) || back.size() != t.size()) f.add("round trip changed decomposition " + std::to_string(i));
  }
  Graph g(VertexSet{1, 2, 3}, {{1, 2}, {1, 3}});
  TreeDecomposition bad = path_from_bags({{1, 2}, {1, 2, 3}});
  bool negative = false;
  if (!is_sane(g, bad).empty()) {
    TreeDecomposition back = decode(clique_adhesions(g, bad), encode_unchecked(g, bad));
    negative = !same_up_to_ids(back, bad);
  }
  if (!negative) f.add("non-sane input decoded back unchanged");
  return f.outcome(std::to_string(kRoundTrips) + " round trips, non-sane input fails to round-trip");
}

// 11. Sanitizing random decompositions.
Outcome sanitization() {
  Rng rng(fuzz_seed() + 111);
  Failures f;
  for (int i = 0; i < kSanitizeRuns; ++i) {
    Graph g = random_graph(rng, uniform(rng, 1, 10), 0.3);
    TreeDecomposition t = random_decomposition(rng, g, true);
    TreeDecomposition s = sanitize(g, t);
    if (!validate_decomposition(g, s).ok()) f.add("invalid output");
    if (!is_sane(g, s).empty()) f.add("output not sane");
    if (width(s) > width(t)) f.add("width increased");
    for (int x : s.nodes()) {
      bool inside = false;
      for (int y : t.nodes()) inside = inside || vset::subset(s.bag(x), t.bag(y));
      if (!inside) f.add("bag not inside an input bag");
    }
  }
  return f.outcome(std::to_string(kSanitizeRuns) + " decompositions");
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// Runs every subcommand over the corpus into dir; returns the commands that did not exit 0.
std::vector<std::string> run_corpus(const std::string& cli, const fs::path& corpus, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<std::string> failed;
  auto run = [&](const std::string& name, const std::string& args, const std::string& stdout_file) {
    std::string cmd = "GUIDEPOST_SEED=0 " + quoted(cli) + " " + name + " " + args + " > " + quoted((dir / stdout_file).string()) + " 2> " +
                      quoted((dir / (stdout_file + ".err")).string());
    int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) failed.push_back(name + " " + args);
  };
  std::vector<fs::path> graphs;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.path().extension() == ".gr") graphs.push_back(entry.path());
  std::sort(graphs.begin(), graphs.end());
  for (const auto& gr : graphs) {
    std::string n = gr.stem().string();
    std::string g = quoted(gr.string());
    auto d = [&](const std::string& file) { return quoted((dir / (n + file)).string()); };
    run("oracle", g, n + ".td");
    run("oracle", g + " --pathwidth", n + ".pw_oracle.td");
    run("sanitize", g + " " + d(".td"), n + ".sane.td");
    run("pathwidth-certify", g + " --emit-forest --td " + d(".pw.td") + " --cert " + d(".pw.json"), n + ".pw.report");
    run("treewidth-decompose", g + " --td " + d(".tw.td") + " --main " + d(".main.td") + " --cert " + d(".tw.json"), n + ".tw.report");
    run("encode", g + " " + d(".sane.td") + " --cliqued " + d(".cliqued.gr"), n + ".triple.json");
    run("decode", d(".cliqued.gr") + " " + d(".triple.json"), n + ".decoded.td");
    run("verify", g + " " + d(".main.td") + " --cert " + d(".tw.json"), n + ".verify.json");
    run("dot", d(".tw.json"), n + ".cert.dot");
    run("dot", d(".tw.td"), n + ".td.dot");
  }
  run("fuzz", "--iterations " + std::to_string(kFuzzIterations), "fuzz.json");
  return failed;
}

// 12. Byte-identical outputs across two runs of every subcommand.
Outcome determinism(const std::string& cli, const std::string& corpus) {
  Failures f;
  fs::path root = fs::temp_directory_path() / ("guidepost_acceptance_" + std::to_string(getpid()));
  fs::remove_all(root);
  auto first = run_corpus(cli, corpus, root / "a");
  auto second = run_corpus(cli, corpus, root / "b");
  for (const auto& c : first) f.add("non-zero exit: " + c);
  for (const auto& c : second) f.add("non-zero exit: " + c);
  std::set<std::string> names_a, names_b;
  for (const auto& e : fs::directory_iterator(root / "a")) names_a.insert(e.path().filename().string());
  for (const auto& e : fs::directory_iterator(root / "b")) names_b.insert(e.path().filename().string());
  if (names_a != names_b) f.add("runs produced different file sets");
  int compared = 0;
  for (const auto& name : names_a) {
    if (!names_b.count(name)) continue;
    ++compared;
    if (read_bytes(root / "a" / name) != read_bytes(root / "b" / name)) f.add("outputs differ: " + name);
  }
  if (f.count == 0) fs::remove_all(root);
  return f.outcome(std::to_string(compared) + " output files compared");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3 && argc != 4) {
    std::cerr << "usage: acceptance <cli-binary> <corpus-dir> [criterion]\n";
    return 2;
  }
  std::string cli = argv[1];
  std::string corpus = argv[2];
  int only = argc == 4 ? std::atoi(argv[3]) : 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"validity corpus", validity_corpus},
      {"oracle cross-check", oracle_cross_check},
      {"factorization rank bound", factorization_bound},
      {"pathwidth pipeline", pathwidth_pipeline},
      {"cycle construction", cycle_construction},
      {"treewidth bounds", treewidth_bounds},
      {"disjoint paths and cutedges", disjoint_paths_cutedges},
      {"thinness surgery", thinness_surgery},
      {"certificate algebra", certificate_algebra},
      {"encoding round trip", encoding_round_trip},
      {"sanitization", sanitization},
      {"determinism", [&] { return determinism(cli, corpus); }}};
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be between 1 and " << criteria.size() << "\n";
    return 2;
  }
  int failed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only > 0 && static_cast<int>(i) + 1 != only) continue;
    ++ran;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << o.detail
              << " [" << seconds_since(start) << " s]" << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
