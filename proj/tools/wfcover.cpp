// wfcover: command-line front end over the wfc library.
//
// Exit codes: 0 success / all consistent, 1 findings or failed property,
// 2 usage, parse or I/O error.  JSON goes to stdout, summaries to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wfc/error.hpp"
#include "wfc/families.hpp"
#include "wfc/graph6.hpp"
#include "wfc/product.hpp"
#include "wfc/report_json.hpp"
#include "wfc/search.hpp"
#include "wfc/theorems.hpp"

namespace {

using namespace wfc;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

Graph first_graph_in_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  auto stream = read_graph6_stream(in, ParseMode::strict);
  if (stream.graphs.empty()) throw UsageError(path + " holds no graph6 records");
  return stream.graphs.front().graph;
}

// "file:PATH", "g6:TEXT", a family spec, or bare graph6.
Graph graph_from_operand(const std::string& text) {
  if (text.rfind("file:", 0) == 0) return first_graph_in_file(text.substr(5));
  if (text.rfind("g6:", 0) == 0) return from_graph6(text.substr(3));
  if (auto spec = try_parse_family(text)) return generate(*spec);
  return from_graph6(text);
}

struct GraphInput {
  std::string family;
  std::string graph6;
  std::string file;

  void add_to(CLI::App* app) {
    app->add_option("--family", family, "family spec: path:k, cycle:k, complete:k, empty:k, fig1");
    app->add_option("--graph6", graph6, "graph6 record");
    app->add_option("--file", file, "file whose first line is a graph6 record");
  }
  bool given() const { return !family.empty() || !graph6.empty() || !file.empty(); }
  Graph resolve() const {
    const int count = !family.empty() + !graph6.empty() + !file.empty();
    if (count != 1) throw UsageError("give exactly one of --family, --graph6, --file");
    if (!family.empty()) return generate(parse_family(family));
    if (!graph6.empty()) return from_graph6(graph6);
    return first_graph_in_file(file);
  }
};

int default_bound() {
  if (const char* env = std::getenv("WFC_ENUM_BOUND")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("WFC_ENUM_BOUND is not an integer: ") + env);
    }
  }
  return kDefaultEnumerationBound;
}

void emit(const nlohmann::json& j) { std::cout << dump(j); }

std::string verdict_line(const TheoremReport& r) {
  return std::string(to_string(r.theorem)) + ": " + std::string(to_string(r.verdict)) +
         (r.conditions_hold ? " (conditions hold)" : " (conditions fail)");
}

int run(int argc, char** argv) {
  CLI::App app{"Well-f-coveredness of graphs and lexicographic products"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  app.require_subcommand(1);
  int bound = default_bound();
  app.add_option("--bound", bound, "enumeration bound on graph order (max 24, env WFC_ENUM_BOUND)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family member");
  std::string gen_family;
  gen->add_option("family", gen_family, "family spec")->required();

  // product
  auto* product = app.add_subcommand("product", "build G o H, emit graph6 and the index map");
  std::string prod_g, prod_h;
  product->add_option("--g", prod_g, "first factor")->required();
  product->add_option("--h", prod_h, "second factor")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "forest number, well-f-coveredness, well-coveredness");
  GraphInput analyze_in;
  analyze_in.add_to(analyze);
  std::string an_g, an_h;
  analyze->add_option("--g", an_g, "first factor (analyze G o H)");
  analyze->add_option("--h", an_h, "second factor (analyze G o H)");

  // check-theorem
  auto* check = app.add_subcommand("check-theorem", "evaluate thm31, thm32 or thm35 on a pair");
  std::string theorem, ck_g, ck_h, z_choice = "min";
  std::optional<int> ck_n, anchor;
  check->add_option("theorem", theorem, "thm31 | thm32 | thm35")->required()->check(
      CLI::IsMember({"thm31", "thm32", "thm35"}));
  check->add_option("--g", ck_g, "first factor")->required();
  check->add_option("--h", ck_h, "second factor");
  check->add_option("--n", ck_n, "order of the empty second factor (thm32)");
  check->add_option("--z-choice", z_choice, "K2 representative: min | max")->check(CLI::IsMember({"min", "max"}));
  check->add_option("--anchor", anchor, "fixed second-factor vertex for the V* witnesses");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "re-run the worked examples and classify their claims");

  // search
  auto* search = app.add_subcommand("search", "scan graph6 files for non-sufficiency witnesses");
  std::string g_file, h_file, out_file, search_theorem = "all";
  bool skip_malformed = false;
  int workers = 0;
  search->add_option("--g-file", g_file, "graph6 file of first factors")->required();
  search->add_option("--h-file", h_file, "graph6 file of second factors (default: --g-file)");
  search->add_option("--theorem", search_theorem, "thm31 | thm32 | thm35 | all")
      ->check(CLI::IsMember({"thm31", "thm32", "thm35", "all"}));
  search->add_option("--out", out_file, "append non-consistent findings here (JSON Lines)");
  search->add_flag("--skip-malformed", skip_malformed, "skip bad graph6 lines instead of aborting");
  search->add_option("--workers", workers, "worker threads (0: default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (bound < 1 || bound > kMaxEnumerationBound)
    throw UsageError("--bound must be in 1.." + std::to_string(kMaxEnumerationBound));
  EnumerationOptions opts;
  opts.max_order = bound;

  if (*gen) {
    emit(graph_json(generate(parse_family(gen_family))));
    return kExitOk;
  }
  if (*product) {
    const LexProduct p = lexicographic(graph_from_operand(prod_g), graph_from_operand(prod_h));
    if (p.size_warning) std::cerr << "warning: " << *p.size_warning << '\n';
    emit(product_json(p));
    return kExitOk;
  }
  if (*analyze) {
    Graph g = Graph::empty(1);
    if (!an_g.empty() || !an_h.empty()) {
      if (an_g.empty() || an_h.empty() || analyze_in.given())
        throw UsageError("analyze takes either one graph input or both --g and --h");
      g = lexicographic(graph_from_operand(an_g), graph_from_operand(an_h)).graph;
    } else {
      g = analyze_in.resolve();
    }
    const auto j = analyze_json(g, opts);
    std::cerr << "order " << g.order() << ", f = " << j["forest_number"] << ", well-f-covered "
              << j["well_f_covered"] << ", alpha = " << j["independence_number"] << ", well-covered "
              << j["well_covered"] << '\n';
    emit(j);
    return kExitOk;
  }
  if (*check) {
    const Graph g = graph_from_operand(ck_g);
    const ZChoice z = z_choice == "max" ? ZChoice::max_index : ZChoice::min_index;
    TheoremReport r;
    if (theorem == "thm32") {
      int n = 0;
      if (ck_n && !ck_h.empty()) throw UsageError("thm32 takes --n or --h, not both");
      if (ck_n) {
        n = *ck_n;
      } else if (!ck_h.empty()) {
        const Graph h = graph_from_operand(ck_h);
        if (!h.is_edgeless()) throw HypothesisError("thm32 needs an edgeless second factor");
        n = h.order();
      } else {
        throw UsageError("thm32 needs --n or an edgeless --h");
      }
      if (n < 1) throw UsageError("--n must be at least 1");
      if (anchor && (*anchor < 0 || *anchor >= n)) throw UsageError("--anchor is not a vertex of the second factor");
      r = check_thm32(g, n, opts, {z, anchor});
    } else {
      if (ck_h.empty()) throw UsageError(theorem + " needs --h");
      const Graph h = graph_from_operand(ck_h);
      if (anchor && (*anchor < 0 || *anchor >= h.order()))
        throw UsageError("--anchor is not a vertex of the second factor");
      r = theorem == "thm31" ? check_thm31(g, h, opts) : check_thm35(g, h, opts, {z, anchor});
    }
    std::cerr << verdict_line(r) << '\n';
    emit(report_json(r));
    return r.verdict == Verdict::consistent ? kExitOk : kExitFindings;
  }
  if (*verify) {
    const TheoremReport r = verify_paper_examples(opts);
    for (const auto& c : r.claims)
      std::cerr << c.example << ": " << to_string(c.status) << ": " << c.claim << '\n';
    emit(report_json(r));
    return r.verdict == Verdict::theorem_violation ? kExitFindings : kExitOk;
  }
  if (*search) {
    const ParseMode mode = skip_malformed ? ParseMode::skip : ParseMode::strict;
    auto load = [&](const std::string& path) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open " + path);
      auto stream = read_graph6_stream(in, mode);
      for (const auto& d : stream.diagnostics) std::cerr << "warning: " << path << ": " << d << '\n';
      std::vector<Graph> out;
      for (auto& rec : stream.graphs) out.push_back(std::move(rec.graph));
      return out;
    };
    const auto gs = load(g_file);
    const auto hs = h_file.empty() ? gs : load(h_file);
    ScanConfig config;
    config.enumeration = opts;
    config.workers = workers;
    if (search_theorem != "all") config.theorems = {*parse_theorem_id(search_theorem)};
    const ScanResult result = scan(cartesian_pairs(gs, hs), config, &std::cerr);
    std::size_t written = 0;
    if (!out_file.empty()) {
      std::ofstream out(out_file, std::ios::app);
      if (!out) throw UsageError("cannot open " + out_file + " for appending");
      written = append_findings(out, result.findings);
    }
    std::cerr << result.findings.size() << " checks, " << result.count(Verdict::non_sufficiency_witness)
              << " non-sufficiency witnesses, " << result.count(Verdict::theorem_violation) << " violations, "
              << result.skipped.size() << " skipped";
    if (!out_file.empty()) std::cerr << ", " << written << " findings appended to " << out_file;
    std::cerr << '\n';
    emit(scan_summary_json(result));
    return result.count(Verdict::consistent) == result.findings.size() ? kExitOk : kExitFindings;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wfc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
