#include "guidepost/fuzz.hpp"

#include <functional>
#include <map>

#include "guidepost/adhesion.hpp"
#include "guidepost/error.hpp"
#include "guidepost/factorization.hpp"
#include "guidepost/generators.hpp"
#include "guidepost/guidance.hpp"
#include "guidepost/oracles.hpp"
#include "guidepost/treewidth.hpp"

namespace guidepost {

namespace {

using gen::Rng;
using gen::uniform;

// Empty string when the property holds, otherwise a description.
using Check = std::function<std::string(Rng&)>;

std::string check_sanitize(Rng& rng) {
  Graph g = gen::random_graph(rng, uniform(rng, 1, 9), 0.35);
  TreeDecomposition t = gen::random_decomposition(rng, g, true);
  TreeDecomposition s = sanitize(g, t);
  if (!validate_decomposition(g, s).ok()) return "sanitized decomposition is invalid";
  if (!is_sane(g, s).empty()) return "sanitized decomposition is not sane";
  if (width(s) > width(t)) return "sanitizing increased the width";
  for (int x : s.nodes()) {
    bool inside = false;
    for (int y : t.nodes()) inside = inside || vset::subset(s.bag(x), t.bag(y));
    if (!inside) return "bag " + vset::to_string(s.bag(x)) + " is not inside an input bag";
  }
  return {};
}

std::string check_encode(Rng& rng) {
  Graph g = gen::random_graph(rng, uniform(rng, 1, 9), 0.35);
  TreeDecomposition t = sanitize(g, gen::random_decomposition(rng, g, gen::coin(rng, 0.5)));
  AdhesionEncoding e = encode(g, t);
  TreeDecomposition back = decode(clique_adhesions(g, t), e);
  if (!same_up_to_ids(back, t)) return "round trip changed the decomposition";
  return {};
}

std::string check_certificates(Rng& rng) {
  Graph g = gen::random_graph(rng, uniform(rng, 1, 8), 0.4);
  Certificate c;
  Graph partial;
  for (int v : g.vertices()) {
    partial.add_vertex(v);
    partial = g.induced(partial.vertices());
    int before = c.colors();
    c = cert_add_vertex(c, partial, v);
    if (!verify_certificate(c).ok()) return "adding " + std::to_string(v) + ": " + verify_certificate(c).describe();
    if (c.colors() > before + 1) return "adding a vertex used more than one new color";
  }
  int u = g.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.num_vertices()) - 1))];
  Certificate removed = cert_remove_vertex(c, u);
  if (!verify_certificate(removed).ok()) return "removing " + std::to_string(u) + ": " + verify_certificate(removed).describe();
  if (removed.colors() > 2 * c.colors()) return "removing a vertex more than doubled the colors";
  Certificate raw = leaf_certificate(gen::random_graph(rng, uniform(rng, 1, 5), 0.5));
  std::map<int, int> shift;
  for (int v : raw.graph.vertices()) shift[v] = v + 100;
  Certificate other = relabel(raw, shift);
  Certificate joined = cert_disjoint_union(c, other);
  if (!verify_certificate(joined).ok()) return "union: " + verify_certificate(joined).describe();
  if (joined.colors() != std::max(c.colors(), other.colors())) return "union changed the color count";
  return {};
}

std::string check_oracles(Rng& rng) {
  Graph g = gen::random_graph(rng, uniform(rng, 1, 8), 0.4);
  OracleResult tw = exact_treewidth(g);
  OracleResult pw = exact_pathwidth(g);
  if (tw.parameter != treewidth_by_search(g)) return "treewidth methods disagree";
  if (pw.parameter != pathwidth_by_search(g)) return "pathwidth methods disagree";
  if (!validate_decomposition(g, tw.witness).ok() || width(tw.witness) != tw.parameter) return "treewidth witness is wrong";
  if (!validate_decomposition(g, pw.witness).ok() || width(pw.witness) != pw.parameter) return "pathwidth witness is wrong";
  return {};
}

std::string check_factorization(Rng& rng) {
  FiniteSemigroup s = gen::random_semigroup(rng, 6);
  Homomorphism h;
  h.semigroup = &s;
  int letters = uniform(rng, 1, 4);
  for (int a = 0; a < letters; ++a) h.image.push_back(uniform(rng, 0, s.size() - 1));
  std::vector<int> word(static_cast<std::size_t>(uniform(rng, 1, 300)));
  for (int& a : word) a = uniform(rng, 0, letters - 1);
  FactorizationTree t = factorize(word, h);
  auto problems = validate_tree(t, word, h);
  if (!problems.empty()) return problems.front();
  if (rank(t) > rank_bound(s)) return "rank " + std::to_string(rank(t)) + " exceeds " + std::to_string(rank_bound(s));
  return {};
}

std::string check_pipeline(Rng& rng) {
  Graph g = gen::random_connected_graph(rng, uniform(rng, 1, 7), 0.35);
  PipelineResult r = full_pipeline(g);
  if (!validate_decomposition(g, r.decomposition).ok()) return "pipeline output is invalid";
  if (r.report.final_width > r.report.width_bound) return "pipeline width exceeds its audit bound";
  if (!r.report.budgets_ok) return "a color budget was exceeded";
  if (!verify_certificate(r.adhesion_certificate).ok()) return "adhesion certificate fails verification";
  return {};
}

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table = {
      {"sanitize", check_sanitize},         {"encode", check_encode},
      {"certificates", check_certificates}, {"oracles", check_oracles},
      {"factorization", check_factorization}, {"pipeline", check_pipeline}};
  return table;
}

}  // namespace

const std::vector<std::string>& fuzz_kinds() {
  static const std::vector<std::string> kinds = {"sanitize", "encode", "certificates", "oracles", "factorization", "pipeline"};
  return kinds;
}

FuzzOutcome run_fuzz(const std::string& kind, std::uint64_t seed, int iterations) {
  auto it = checks().find(kind);
  require(it != checks().end(), "unknown fuzz kind '" + kind + "'");
  require(iterations >= 0, "iterations must be non-negative");
  FuzzOutcome out;
  out.kind = kind;
  for (int i = 0; i < iterations; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    std::string failure;
    try {
      failure = it->second(rng);
    } catch (const Error& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++out.runs;
    if (!failure.empty()) {
      if (out.failures == 0) out.first_failure = "iteration " + std::to_string(i) + ": " + failure;
      ++out.failures;
    }
  }
  return out;
}

}  // namespace guidepost
