#include "guidepost/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "guidepost/adhesion.hpp"
#include "guidepost/error.hpp"
#include "guidepost/factorization.hpp"
#include "guidepost/fuzz.hpp"
#include "guidepost/generators.hpp"
#include "guidepost/oracles.hpp"
#include "guidepost/pace.hpp"
#include "guidepost/pathwidth.hpp"
#include "guidepost/serialize.hpp"
#include "guidepost/treewidth.hpp"

namespace guidepost {

namespace {

struct Options {
  std::string graph;
  std::string decomposition;
  std::string input;
  std::string output;
  std::string pd;
  std::string td_out;
  std::string main_out;
  std::string cert_out;
  std::string cert_in;
  std::string cliqued_out;
  bool pathwidth = false;
  bool merge_forest = false;
  bool timings = false;
  bool emit_forest = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int iterations = 100;
  std::vector<std::string> kinds;
};

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
  bool required = true;
};

struct BoundLine {
  std::string name;
  std::string formula;
  std::int64_t bound = 0;
  std::int64_t actual = 0;
};

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), "cannot write " + path);
  f << text;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output.empty())
    out << text;
  else
    write_file(opt.output, text);
}

bool passes(const std::vector<CheckLine>& checks) {
  for (const auto& c : checks)
    if (c.required && !c.pass) return false;
  return true;
}

bool within(const std::vector<BoundLine>& bounds) {
  for (const auto& b : bounds)
    if (b.actual > b.bound) return false;
  return true;
}

Json checks_json(const std::vector<CheckLine>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["check"] = c.name;
    j["pass"] = c.pass;
    j["required"] = c.required;
    j["detail"] = c.detail;
    out.push_back(j);
  }
  return out;
}

Json bounds_json(const std::vector<BoundLine>& bounds) {
  Json out = Json::array();
  for (const auto& b : bounds) {
    Json j;
    j["name"] = b.name;
    j["formula"] = b.formula;
    j["bound"] = b.bound;
    j["actual"] = b.actual;
    j["ok"] = b.actual <= b.bound;
    out.push_back(j);
  }
  return out;
}

std::vector<CheckLine> decomposition_checks(const Graph& g, const TreeDecomposition& t) {
  ValidationReport v = validate_decomposition(g, t);
  std::vector<CheckLine> out{{"decomposition", v.ok(), v.describe()}};
  if (!v.ok()) return out;
  auto sane = is_sane(g, t);
  out.push_back({"sane", sane.empty(), sane.empty() ? "" : sane.front().describe(), false});
  return out;
}

std::vector<CheckLine> certificate_checks(const Graph& g, const TreeDecomposition& t, const Certificate& c) {
  std::vector<CheckLine> out;
  out.push_back({"certificate graph", c.graph == g, c.graph == g ? "" : "certificate graph differs from the input graph"});
  bool same = renumber(c.decomposition) == renumber(t);
  out.push_back({"certificate decomposition", same, same ? "" : "certificate decomposition differs from the input decomposition"});
  ValidationReport v = validate_decomposition(c.graph, c.decomposition);
  out.push_back({"certificate decomposition valid", v.ok(), v.describe()});
  auto problems = validate_guidance(c.graph, c.guidance);
  out.push_back({"guidance", problems.empty(), problems.empty() ? "" : problems.front()});
  if (problems.empty() && v.ok()) {
    auto sets = captured_sets(c.decomposition, c.captured);
    CaptureResult cap = captures(c.graph, c.guidance, sets);
    std::string detail;
    if (!cap.ok()) detail = "set " + vset::to_string(sets[static_cast<std::size_t>(cap.failed)]) + " has no capturing vertex";
    out.push_back({"capture", cap.ok(), detail});
  } else {
    out.push_back({"capture", false, "skipped because the certificate is malformed"});
  }
  auto clash = coloring_clash(c.guidance, c.coloring);
  std::string detail;
  if (clash)
    detail = "trees " + std::to_string(clash->first) + " and " + std::to_string(clash->second) +
             " share a vertex and color " + std::to_string(c.coloring.color[static_cast<std::size_t>(clash->first)]);
  out.push_back({"coloring", !clash, detail});
  return out;
}

Json forest_json(const FactorizationTree& t) {
  Json j;
  j["kind"] = kind_name(t.kind);
  j["span"] = {t.begin, t.end};
  j["value"] = t.value;
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(forest_json(c));
  j["children"] = children;
  return j;
}

int num_vertices(const Graph& g) { return std::max(g.max_vertex(), 0); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int cmd_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
  Graph g = read_gr_file(opt.graph);
  OracleResult r = opt.pathwidth ? exact_pathwidth(g) : exact_treewidth(g);
  TreeDecomposition t = drop_redundant_bags(r.witness);
  ValidationReport v = validate_decomposition(g, t);
  ensure(v.ok(), "oracle witness is invalid: " + v.describe());
  ensure(width(t) == r.parameter, "oracle witness width differs from the parameter");
  ensure(!opt.pathwidth || t.is_path_forest(), "pathwidth witness is not a path");
  err << (opt.pathwidth ? "pw " : "tw ") << r.parameter << "\n";
  emit(opt, out, decomposition_text(t, num_vertices(g), opt.merge_forest));
  return kExitOk;
}

int cmd_sanitize(const Options& opt, std::ostream& out, std::ostream& err) {
  Graph g = read_gr_file(opt.graph);
  TreeDecomposition t = read_td_file(opt.decomposition);
  require_valid(g, t, "input decomposition");
  TreeDecomposition s = sanitize(g, t);
  ensure(validate_decomposition(g, s).ok(), "sanitized decomposition is invalid");
  ensure(is_sane(g, s).empty(), "sanitized decomposition is not sane");
  ensure(width(s) <= width(t), "sanitizing increased the width");
  for (int x : s.nodes()) {
    bool inside = false;
    for (int y : t.nodes()) inside = inside || vset::subset(s.bag(x), t.bag(y));
    ensure(inside, "sanitized bag is not inside an input bag");
  }
  err << "width " << width(t) << " -> " << width(s) << ", nodes " << t.size() << " -> " << s.size() << "\n";
  emit(opt, out, decomposition_text(s, num_vertices(g), opt.merge_forest));
  return kExitOk;
}

int cmd_pathwidth(const Options& opt, std::ostream& out, std::ostream&) {
  auto start = Clock::now();
  Graph g = read_gr_file(opt.graph);
  Json report;
  report["command"] = "pathwidth-certify";
  report["instance"] = opt.graph;
  TreeDecomposition p;
  if (!opt.pd.empty()) {
    p = read_td_file(opt.pd);
    require(p.is_path_forest(), "supplied decomposition is not a path decomposition");
    require_valid(g, p, "supplied path decomposition");
    report["oracle"] = {{"source", "supplied"}, {"width", width(p)}};
  } else {
    OracleResult r = exact_pathwidth(g);
    p = r.witness;
    report["oracle"] = {{"source", "exact"}, {"pathwidth", r.parameter}};
  }
  PathwidthReport pr;
  Certificate c = certify_pathwidth(g, p, &pr);

  int nodes_ok = 0;
  Json nodes = Json::array();
  for (const auto& n : pr.nodes) {
    Json j;
    j["span"] = {n.begin, n.end};
    j["kind"] = kind_name(n.kind);
    j["width"] = n.width;
    j["budget"] = n.budget;
    j["colors"] = n.colors;
    nodes.push_back(j);
    if (n.colors <= n.budget) ++nodes_ok;
  }
  std::vector<BoundLine> bounds = {
      {"factorization rank", "3|S|", 3 * static_cast<std::int64_t>(pr.semigroup_size), pr.rank},
      {"root colors", "budget(root)", pr.root_budget, pr.root_colors},
      {"nodes over budget", "0", 0, static_cast<std::int64_t>(pr.nodes.size()) - nodes_ok}};
  std::vector<CheckLine> checks = decomposition_checks(g, c.decomposition);
  for (auto& line : certificate_checks(g, c.decomposition, c)) checks.push_back(line);

  report["arity"] = pr.arity;
  report["word_length"] = pr.word_length;
  report["semigroup_size"] = pr.semigroup_size;
  report["width"] = width(c.decomposition);
  report["colors"] = c.colors();
  report["bounds"] = bounds_json(bounds);
  report["nodes"] = nodes;
  if (opt.emit_forest) report["forest"] = forest_json(pr.forest);
  report["checks"] = checks_json(checks);
  bool ok = passes(checks) && within(bounds);
  report["pass"] = ok;
  if (opt.timings) report["timings"] = {{"total_ms", millis_since(start)}};

  if (!opt.td_out.empty()) write_file(opt.td_out, decomposition_text(c.decomposition, num_vertices(g), opt.merge_forest));
  if (!opt.cert_out.empty()) write_file(opt.cert_out, dump(certificate_to_json(c)));
  emit(opt, out, dump(report));
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_treewidth(const Options& opt, std::ostream& out, std::ostream&) {
  auto start = Clock::now();
  Graph g = read_gr_file(opt.graph);
  Json report;
  report["command"] = "treewidth-decompose";
  report["instance"] = opt.graph;
  PipelineResult r;
  if (!opt.decomposition.empty()) {
    TreeDecomposition t = read_td_file(opt.decomposition);
    require_valid(g, t, "supplied decomposition");
    r = full_pipeline(g, t);
    report["oracle"] = {{"source", "supplied"}, {"width", width(t)}};
  } else {
    r = full_pipeline(g);
    report["oracle"] = {{"source", "exact"}, {"treewidth", r.report.k}};
  }
  const PipelineReport& pr = r.report;
  int k = std::max(pr.k, 0);
  std::vector<BoundLine> bounds = {
      {"load", "2k^3", load_bound(k), pr.audit.max_load},
      {"routing budget", "2k^3", load_bound(k), pr.audit.max_budget},
      {"marginal pathwidth", "2k+1", marginal_pathwidth_bound(k), pr.audit.max_marginal_width},
      {"conflict colors", "4k^3+2k", conflict_color_bound(k), pr.conflicts.colors},
      {"colorful colors", "4k^3+4k+2", colorful_color_bound(k), pr.colorful_colors},
      {"final width", "max certified marginal width + max adhesion", pr.width_bound, pr.final_width}};
  std::vector<CheckLine> checks = decomposition_checks(g, r.decomposition);
  checks.push_back({"colors within budget", pr.budgets_ok, pr.budgets_ok ? "" : "a factorization node exceeded its color budget"});
  CertificateReport cr = verify_certificate(r.adhesion_certificate);
  checks.push_back({"adhesion certificate", cr.ok(), cr.describe()});

  report["k"] = pr.k;
  report["main_nodes"] = pr.main_nodes;
  report["max_adhesion"] = pr.max_adhesion;
  report["max_semigroup"] = pr.max_semigroup;
  report["nested_width"] = pr.nested_width;
  report["flattened_width"] = pr.flattened_width;
  report["final_width"] = pr.final_width;
  report["routing"] = {{"calls", pr.audit.calls}, {"max_requests", pr.audit.max_requests}};
  report["conflicts"] = {{"pairs", pr.conflicts.pairs}, {"max_back_degree", pr.conflicts.max_back_degree}};
  report["bounds"] = bounds_json(bounds);
  report["checks"] = checks_json(checks);
  bool ok = passes(checks) && within(bounds);
  report["pass"] = ok;
  if (opt.timings) report["timings"] = {{"total_ms", millis_since(start)}};

  int n = num_vertices(g);
  if (!opt.td_out.empty()) write_file(opt.td_out, decomposition_text(r.decomposition, n, opt.merge_forest));
  if (!opt.main_out.empty()) write_file(opt.main_out, decomposition_text(r.adhesion_certificate.decomposition, n, opt.merge_forest));
  if (!opt.cert_out.empty()) write_file(opt.cert_out, dump(certificate_to_json(r.adhesion_certificate)));
  emit(opt, out, dump(report));
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_encode(const Options& opt, std::ostream& out, std::ostream&) {
  Graph g = read_gr_file(opt.graph);
  TreeDecomposition t = read_td_file(opt.decomposition);
  AdhesionEncoding e = encode(g, t);
  Graph h = clique_adhesions(g, t);
  auto problems = encoding_problems(h, e);
  ensure(problems.empty(), "encoding is malformed: " + (problems.empty() ? std::string() : problems.front()));
  ensure(same_up_to_ids(decode(h, e), t), "decoding does not reproduce the decomposition");
  if (!opt.cliqued_out.empty()) write_file(opt.cliqued_out, graph_text(h));
  emit(opt, out, dump(encoding_to_json(e)));
  return kExitOk;
}

int cmd_decode(const Options& opt, std::ostream& out, std::ostream&) {
  Graph h = read_gr_file(opt.graph);
  AdhesionEncoding e = encoding_from_json(parse_json(read_file(opt.input)));
  TreeDecomposition t = decode(h, e);
  ValidationReport v = validate_decomposition(h, t);
  ensure(v.ok(), "decoded decomposition is invalid: " + v.describe());
  auto sane = is_sane(h, t);
  ensure(sane.empty(), "decoded decomposition is not sane: " + (sane.empty() ? std::string() : sane.front().describe()));
  ensure(encode(h, t) == e, "re-encoding the decoded decomposition gives a different encoding");
  emit(opt, out, decomposition_text(t, num_vertices(h), opt.merge_forest));
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream&) {
  Graph g = read_gr_file(opt.graph);
  TreeDecomposition t = read_td_file(opt.decomposition);
  std::vector<CheckLine> checks = decomposition_checks(g, t);
  if (!opt.cert_in.empty()) {
    Certificate c = certificate_from_json(parse_json(read_file(opt.cert_in)));
    for (auto& line : certificate_checks(g, t, c)) checks.push_back(line);
  }
  Json report;
  report["command"] = "verify";
  report["instance"] = opt.graph;
  report["checks"] = checks_json(checks);
  bool ok = passes(checks);
  report["pass"] = ok;
  emit(opt, out, dump(report));
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_dot(const Options& opt, std::ostream& out, std::ostream&) {
  std::string text = read_file(opt.input);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    emit(opt, out, certificate_dot(certificate_from_json(parse_json(text))));
  else
    emit(opt, out, decomposition_dot(decomposition_from_text(text)));
  return kExitOk;
}

int cmd_fuzz(const Options& opt, std::ostream& out, std::ostream&) {
  auto start = Clock::now();
  std::uint64_t seed = opt.seed_given ? opt.seed : gen::fuzz_seed();
  std::vector<std::string> kinds = opt.kinds.empty() ? fuzz_kinds() : opt.kinds;
  Json report;
  report["command"] = "fuzz";
  report["seed"] = seed;
  report["iterations"] = opt.iterations;
  Json results = Json::array();
  bool ok = true;
  for (const auto& kind : kinds) {
    FuzzOutcome f = run_fuzz(kind, seed, opt.iterations);
    Json j;
    j["kind"] = f.kind;
    j["runs"] = f.runs;
    j["failures"] = f.failures;
    j["first_failure"] = f.first_failure;
    results.push_back(j);
    ok = ok && f.failures == 0;
  }
  report["results"] = results;
  report["pass"] = ok;
  if (opt.timings) report["timings"] = {{"total_ms", millis_since(start)}};
  emit(opt, out, dump(report));
  return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Guidance systems for tree and path decompositions", "guidepost"};
  app.require_subcommand(1);

  auto* oracle = app.add_subcommand("oracle", "Exact treewidth or pathwidth with an optimal decomposition");
  oracle->add_option("graph", opt.graph, "Graph in .gr format")->required();
  oracle->add_flag("--pathwidth", opt.pathwidth, "Compute pathwidth instead of treewidth");

  auto* sanitize_cmd = app.add_subcommand("sanitize", "Repair a decomposition into a sane one");
  sanitize_cmd->add_option("graph", opt.graph, "Graph in .gr format")->required();
  sanitize_cmd->add_option("decomposition", opt.decomposition, "Decomposition in .td format")->required();

  auto* pathwidth = app.add_subcommand("pathwidth-certify", "Guidance certificate from a path decomposition");
  pathwidth->add_option("graph", opt.graph, "Graph in .gr format")->required();
  pathwidth->add_option("--pd", opt.pd, "Path decomposition to start from instead of the oracle");
  pathwidth->add_option("--td", opt.td_out, "Write the certified decomposition here");
  pathwidth->add_option("--cert", opt.cert_out, "Write the certificate JSON here");
  pathwidth->add_flag("--emit-forest", opt.emit_forest, "Include the factorization forest in the report");

  auto* treewidth = app.add_subcommand("treewidth-decompose", "Decomposition with adhesion-capturing certificate");
  treewidth->add_option("graph", opt.graph, "Graph in .gr format")->required();
  treewidth->add_option("--decomposition", opt.decomposition, "Decomposition to start from instead of the oracle");
  treewidth->add_option("--td", opt.td_out, "Write the final decomposition here");
  treewidth->add_option("--main", opt.main_out, "Write the decomposition whose adhesions are captured here");
  treewidth->add_option("--cert", opt.cert_out, "Write the adhesion certificate JSON here");

  auto* encode_cmd = app.add_subcommand("encode", "Encode a sane decomposition as an edge triple");
  encode_cmd->add_option("graph", opt.graph, "Graph in .gr format")->required();
  encode_cmd->add_option("decomposition", opt.decomposition, "Sane decomposition in .td format")->required();
  encode_cmd->add_option("--cliqued", opt.cliqued_out, "Write the graph with adhesion cliques here");

  auto* decode_cmd = app.add_subcommand("decode", "Decode an edge triple over the graph with adhesion cliques");
  decode_cmd->add_option("graph", opt.graph, "Graph with adhesion cliques in .gr format")->required();
  decode_cmd->add_option("triple", opt.input, "Triple JSON")->required();

  auto* verify = app.add_subcommand("verify", "Check a decomposition and optionally a certificate");
  verify->add_option("graph", opt.graph, "Graph in .gr format")->required();
  verify->add_option("decomposition", opt.decomposition, "Decomposition in .td format")->required();
  verify->add_option("--cert", opt.cert_in, "Certificate JSON to check against the pair");

  auto* dot = app.add_subcommand("dot", "Render a decomposition or certificate as DOT");
  dot->add_option("input", opt.input, ".td file or certificate JSON")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Seeded property checks");
  fuzz->add_option("--seed", opt.seed, "Seed; defaults to GUIDEPOST_SEED or 0");
  fuzz->add_option("--iterations", opt.iterations, "Iterations per kind")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--kind", opt.kinds, "Kinds to run; all when omitted")->check(CLI::IsMember(fuzz_kinds()));

  for (auto* sub : {oracle, sanitize_cmd, pathwidth, treewidth, encode_cmd, decode_cmd, verify, dot, fuzz})
    sub->add_option("-o,--output", opt.output, "Write the primary output here instead of stdout");
  for (auto* sub : {oracle, sanitize_cmd, pathwidth, treewidth, decode_cmd})
    sub->add_flag("--merge-forest", opt.merge_forest, "Join a forest under an extra empty bag in .td output");
  for (auto* sub : {pathwidth, treewidth, fuzz})
    sub->add_flag("--timings", opt.timings, "Add wall-clock timings to the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }
  opt.seed_given = fuzz->count("--seed") > 0;

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&, std::ostream&)>>> handlers = {
      {oracle, cmd_oracle},   {sanitize_cmd, cmd_sanitize}, {pathwidth, cmd_pathwidth},
      {treewidth, cmd_treewidth}, {encode_cmd, cmd_encode},  {decode_cmd, cmd_decode},
      {verify, cmd_verify},   {dot, cmd_dot},               {fuzz, cmd_fuzz}};
  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(opt, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ResourceLimitError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const InvariantError& e) {
    err << "self-check failed: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitParseError;
}

}  // namespace guidepost
