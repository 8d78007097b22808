#include <doctest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "guidepost/cli.hpp"
#include "guidepost/guidance.hpp"
#include "guidepost/pace.hpp"
#include "guidepost/serialize.hpp"

using namespace guidepost;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("guidepost_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string corpus(const std::string& name) { return std::string(GUIDEPOST_CORPUS_DIR) + "/" + name + ".gr"; }

// Recursive-descent check of the DOT subset: graphs, subgraphs, node, edge and attribute statements.
class DotChecker {
 public:
  explicit DotChecker(const std::string& text) { tokenize(text); }

  bool valid() {
    if (!ok_) return false;
    if (!accept("digraph") && !accept("graph")) return false;
    if (peek() != "{") next();
    if (!block()) return false;
    return pos_ == tokens_.size();
  }

  std::set<std::string> classes;

 private:
  void tokenize(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '"') {
        std::string tok = "\"";
        ++i;
        while (i < s.size() && s[i] != '"') {
          if (s[i] == '\\' && i + 1 < s.size()) tok += s[i++];
          tok += s[i++];
        }
        if (i >= s.size()) {
          ok_ = false;
          return;
        }
        ++i;
        tokens_.push_back(tok + "\"");
      } else if (c == '-' && i + 1 < s.size() && (s[i + 1] == '>' || s[i + 1] == '-')) {
        tokens_.push_back(s.substr(i, 2));
        i += 2;
      } else if (std::string("{}[]=;,").find(c) != std::string::npos) {
        tokens_.emplace_back(1, c);
        ++i;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
        if (j == i) {
          ok_ = false;
          return;
        }
        tokens_.push_back(s.substr(i, j - i));
        i = j;
      } else {
        ok_ = false;
        return;
      }
    }
  }

  std::string peek() const { return pos_ < tokens_.size() ? tokens_[pos_] : ""; }
  std::string next() { return pos_ < tokens_.size() ? tokens_[pos_++] : ""; }
  bool accept(const std::string& t) {
    if (peek() != t) return false;
    ++pos_;
    return true;
  }
  static bool is_id(const std::string& t) {
    return !t.empty() && (t[0] == '"' || std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_');
  }

  bool block() {
    if (!accept("{")) return false;
    while (peek() != "}") {
      if (peek().empty() || !statement()) return false;
      accept(";");
    }
    return accept("}");
  }

  bool operand() {
    if (peek() == "subgraph" || peek() == "{") {
      accept("subgraph");
      if (peek() != "{" && !is_id(next())) return false;
      return block();
    }
    return is_id(next());
  }

  bool statement() {
    if (is_id(peek()) && pos_ + 1 < tokens_.size() && tokens_[pos_ + 1] == "=") {
      pos_ += 2;
      return is_id(next());
    }
    if (!operand()) return false;
    while (peek() == "->")
      if (!(accept("->") && operand())) return false;
    if (peek() == "[") return attributes();
    return true;
  }

  bool attributes() {
    accept("[");
    while (peek() != "]") {
      std::string key = next();
      if (!is_id(key) || !accept("=")) return false;
      std::string value = next();
      if (!is_id(value)) return false;
      if (key == "class") classes.insert(value);
      if (peek() == "," || peek() == ";") next();
    }
    return accept("]");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  bool ok_ = true;
};

}  // namespace

TEST_CASE("dot checker rejects malformed text") {
  CHECK(DotChecker("digraph x {\n  a -> b [color=\"red\"];\n}\n").valid());
  CHECK_FALSE(DotChecker("digraph x {\n  a -> ;\n}\n").valid());
  CHECK_FALSE(DotChecker("digraph x {\n  a [label=\"open];\n}\n").valid());
  CHECK_FALSE(DotChecker("digraph x {\n  a -> b\n").valid());
}

TEST_CASE("oracle subcommand") {
  Run k4 = cli({"oracle", corpus("k4")});
  CHECK(k4.code == kExitOk);
  CHECK(k4.err == "tw 3\n");
  TreeDecomposition t = decomposition_from_text(k4.out);
  CHECK(t.size() == 1);
  CHECK(t.bag(1) == VertexSet{1, 2, 3, 4});

  Run bad = cli({"oracle", put("bad.gr", "c comment\np td 3 0\n")});
  CHECK(bad.code == kExitParseError);
  CHECK(bad.err.find("line 2") != std::string::npos);

  std::string big = "p tw 20 19\n";
  for (int v = 1; v < 20; ++v) big += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  CHECK(cli({"oracle", put("big.gr", big)}).code == kExitResourceCap);
  CHECK(cli({"oracle", (scratch() / "missing.gr").string()}).code == kExitParseError);
}

TEST_CASE("argument errors and help") {
  CHECK(cli({}).code == kExitParseError);
  CHECK(cli({"nonsense"}).code == kExitParseError);
  CHECK(cli({"fuzz", "--kind", "nonsense"}).code == kExitParseError);
  Run help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("treewidth-decompose") != std::string::npos);
}

TEST_CASE("verify names failing checks") {
  std::string gr = corpus("cycle6");
  std::string good = put("c6.td", "s td 4 3 6\nb 1 1 2 3\nb 2 1 3 4\nb 3 1 4 5\nb 4 1 5 6\n1 2\n2 3\n3 4\n");
  Run ok = cli({"verify", gr, good});
  CHECK(ok.code == kExitOk);
  CHECK(parse_json(ok.out)["pass"] == true);

  std::string missing = put("c6_missing.td", "s td 4 3 6\nb 1 2 3\nb 2 1 3 4\nb 3 1 4 5\nb 4 1 5 6\n1 2\n2 3\n3 4\n");
  Run bad = cli({"verify", gr, missing});
  CHECK(bad.code == kExitVerifyFailure);
  CHECK(bad.out.find("edge {1,2} in no bag") != std::string::npos);

  Certificate c = cycle_certificate(6);
  std::string cert = put("c6.json", certificate_to_json(c).dump(2));
  std::string td = put("c6_cert.td", decomposition_text(c.decomposition, 6));
  CHECK(cli({"verify", gr, td, "--cert", cert}).code == kExitOk);
  Json clashing = certificate_to_json(c);
  for (auto& color : clashing["colors"]) color = 0;
  Run clash = cli({"verify", gr, td, "--cert", put("c6_clash.json", clashing.dump())});
  CHECK(clash.code == kExitVerifyFailure);
  CHECK(clash.out.find("trees 0 and 1 share a vertex and color 0") != std::string::npos);
  CHECK(cli({"verify", gr, td, "--cert", put("broken.json", "{\n  \"graph\": \n")}).code == kExitParseError);
}

TEST_CASE("dot output") {
  Run empty = cli({"dot", put("empty.td", "s td 0 0 0\n")});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out == "digraph decomposition {\n}\n");

  Run cycle = cli({"dot", put("c6_dot.json", certificate_to_json(cycle_certificate(6)).dump())});
  CHECK(cycle.code == kExitOk);
  DotChecker checker(cycle.out);
  CHECK(checker.valid());
  CHECK(checker.classes == std::set<std::string>{"\"color0\"", "\"color1\"", "\"color2\""});

  for (const char* name : {"k4", "grid3x3", "two_components"}) {
    std::string td = put(std::string(name) + ".td", cli({"oracle", corpus(name)}).out);
    CHECK(DotChecker(cli({"dot", td}).out).valid());
  }
}

TEST_CASE("pipelines write files that verify") {
  for (const char* name : {"cycle10", "grid3x3", "two_components"}) {
    std::string base = (scratch() / name).string();
    Run pw = cli({"pathwidth-certify", corpus(name), "--td", base + ".pw.td", "--cert", base + ".pw.json", "--emit-forest"});
    CHECK(pw.code == kExitOk);
    Json report = parse_json(pw.out);
    CHECK(report["pass"] == true);
    CHECK(report.contains("forest"));
    for (const auto& b : report["bounds"]) CHECK(b["actual"].get<std::int64_t>() <= b["bound"].get<std::int64_t>());
    CHECK(cli({"verify", corpus(name), base + ".pw.td", "--cert", base + ".pw.json"}).code == kExitOk);

    Run tw = cli({"treewidth-decompose", corpus(name), "--td", base + ".tw.td", "--main", base + ".main.td", "--cert",
                  base + ".tw.json"});
    CHECK(tw.code == kExitOk);
    CHECK(parse_json(tw.out)["pass"] == true);
    CHECK(cli({"verify", corpus(name), base + ".tw.td"}).code == kExitOk);
    CHECK(cli({"verify", corpus(name), base + ".main.td", "--cert", base + ".tw.json"}).code == kExitOk);
  }
}

TEST_CASE("encode and decode through files") {
  std::string gr = corpus("series_parallel");
  std::string td = put("sp.td", cli({"oracle", gr}).out);
  std::string sane = put("sp_sane.td", cli({"sanitize", gr, td}).out);
  std::string cliqued = (scratch() / "sp_cliqued.gr").string();
  Run enc = cli({"encode", gr, sane, "--cliqued", cliqued});
  CHECK(enc.code == kExitOk);
  Run dec = cli({"decode", cliqued, put("sp_triple.json", enc.out)});
  CHECK(dec.code == kExitOk);
  CHECK(same_up_to_ids(decomposition_from_text(dec.out), read_td_file(sane)));

  std::string path_gr = put("p3.gr", "p tw 3 2\n1 2\n1 3\n");
  std::string not_sane = put("p3.td", "s td 2 3 3\nb 1 1 2\nb 2 1 2 3\n1 2\n");
  CHECK(cli({"encode", path_gr, not_sane}).code == kExitVerifyFailure);
  Json missing_root = parse_json(enc.out);
  missing_root["R"] = Json::array();
  CHECK(cli({"decode", cliqued, put("sp_bad.json", missing_root.dump())}).code == kExitVerifyFailure);
}

TEST_CASE("outputs are identical across runs") {
  std::string gr = corpus("grid3x3");
  std::string td = put("grid.td", cli({"oracle", gr}).out);
  std::vector<std::vector<std::string>> commands = {
      {"oracle", gr},
      {"oracle", gr, "--pathwidth"},
      {"sanitize", gr, td},
      {"pathwidth-certify", gr},
      {"treewidth-decompose", gr},
      {"encode", gr, td},
      {"verify", gr, td},
      {"dot", td},
      {"fuzz", "--iterations", "5"}};
  for (const auto& args : commands) {
    Run a = cli(args), b = cli(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("fuzz seeds") {
  Run a = cli({"fuzz", "--iterations", "3", "--kind", "encode", "--seed", "7"});
  CHECK(a.code == kExitOk);
  Json j = parse_json(a.out);
  CHECK(j["seed"] == 7);
  CHECK(j["results"].size() == 1);
  CHECK(j["results"][0]["runs"] == 3);
  CHECK(cli({"fuzz", "--iterations", "3", "--kind", "encode", "--seed", "8"}).code == kExitOk);
}
