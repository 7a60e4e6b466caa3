// Acceptance run: one PASS/FAIL line per criterion, with measured runtime
// against its limit.  Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "wfc/families.hpp"
#include "wfc/graph6.hpp"
#include "wfc/independence.hpp"
#include "wfc/report_json.hpp"
#include "wfc/search.hpp"
#include "wfc/theorems.hpp"

using namespace wfc;

namespace {

// Returns an empty string on success, otherwise the first problem found.
using Criterion = std::function<std::string()>;

int failures = 0;

void run(int id, const char* what, double limit_s, const Criterion& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (problem.empty() && limit_s > 0 && s >= limit_s) problem = "too slow";
  const bool ok = problem.empty();
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%.3f s, limit %s)%s%s\n", ok ? "PASS" : "FAIL", id, what, s,
              limit_s > 0 ? (std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "none",
              ok ? "" : " -- ", problem.c_str());
  std::fflush(stdout);
}

Graph fam(const char* spec) { return generate(parse_family(spec)); }

std::string str(long v) { return std::to_string(v); }

bool uniform_oracle(const Graph& g) {
  std::set<int> orders;
  for (const auto s : oracle::maximal_forests(g)) orders.insert(popcount(s));
  return orders.size() == 1;
}

bool connected(const Graph& g) { return connected_components(g).size() == 1; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + WFC_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::string c1() {
  const Graph p4 = fam("path:4");
  const LexProduct p = lexicographic(p4, Graph::empty(2));
  const int f = forest_number(p.graph);
  if (f != oracle::forest_number(p.graph) || f != 6) return "f = " + str(f);
  const Uniformity u = is_well_f_covered(p.graph);
  if (u.uniform || !u.witness) return "product reported well-f-covered";
  const auto hist = size_histogram(enumerate_maximal_induced_forests(p.graph));
  if (hist.size() != 2 || !hist.count(5) || !hist.count(6)) return "orders are not {5,6}";
  if (u.witness->first.size() != 5 || u.witness->second.size() != 6) return "witness orders wrong";
  const TheoremReport r = check_thm32(p4, 2);
  if (r.conditions.size() != enumerate_maximal_induced_forests(p4).size()) return "missing condition records";
  for (const auto& c : r.conditions)
    if (!c.holds) return "condition fails on a forest";
  if (r.verdict != Verdict::non_sufficiency_witness) return std::string("verdict ") + std::string(to_string(r.verdict));
  return {};
}

std::string c2() {
  const Graph c5 = fam("cycle:5"), c4 = fam("cycle:4");
  const TheoremReport r = check_thm35(c5, c4);
  const int f = std::get<int>(r.ground_truth.at("f_product"));
  if (f != 6 || independence_number(c5) * forest_number(c4) != 6) return "f = " + str(f);
  const LexProduct p = lexicographic(c5, c4);
  // x_i / y_j numbered from 1 around each cycle
  const VertexSubset a = relabel_product_subset(p.map, {{0, 0}, {0, 2}, {1, 0}, {2, 0}, {3, 0}, {3, 2}});
  if (a.size() != 6 || !is_maximal_induced_forest(p.graph, a)) return "listed set is not a maximal forest of order 6";
  if (!oracle::is_maximal_forest(oracle::matrix_of(p.graph), a.mask())) return "oracle disagrees on listed set";
  if (r.verdict != Verdict::non_sufficiency_witness) return std::string("verdict ") + std::string(to_string(r.verdict));
  return {};
}

std::string c3() {
  using namespace fig1;
  const Graph g = fam("fig1"), c4 = fam("cycle:4");
  if (!is_well_covered(g).uniform || independence_number(g) != 2) return "fig1 not well-covered with alpha 2";
  const VertexSubset abd = VertexSubset::of(5, {a, b, d}), eabc = VertexSubset::of(5, {e, a, b, c});
  if (!is_maximal_induced_forest(g, abd) || !is_maximal_induced_forest(g, eabc)) return "forest not maximal";
  const int f_c4 = forest_number(c4), a_c4 = independence_number(c4);
  const long v1 = thm35_condition4_lhs(forest_stats(g, abd), f_c4, a_c4);
  const long v2 = thm35_condition4_lhs(forest_stats(g, eabc), f_c4, a_c4);
  if (v1 != 5 || v2 != 6) return "condition values " + str(v1) + ", " + str(v2);
  if (is_well_f_covered(lexicographic(g, c4).graph).uniform) return "G o C4 reported well-f-covered";
  const TheoremReport examples = verify_paper_examples();
  for (const auto& claim : examples.claims)
    if (claim.example == "fig1_o_c4" && claim.claim == "G[{a,b,c}] is a maximal forest")
      return claim.status == ClaimStatus::refuted ? std::string{} : "claim not refuted";
  return "claim missing from verify-paper";
}

std::string c4() {
  std::vector<Graph> hs;
  for (const Graph& h : oracle::all_unlabeled_up_to(5))
    if (connected(h)) hs.push_back(h);
  if (hs.size() != 31) return "expected 31 connected graphs, got " + str(static_cast<long>(hs.size()));
  for (int m = 1; m <= 3; ++m)
    for (const Graph& h : hs) {
      const TheoremReport r = check_thm31(Graph::empty(m), h);
      const Graph prod = lexicographic(Graph::empty(m), h).graph;
      const bool wfc_prod = uniform_oracle(prod);
      const bool wfc_h = uniform_oracle(h);
      if (wfc_prod != std::get<bool>(r.ground_truth.at("wfc_product"))) return "report disagrees with oracle";
      if (wfc_prod != wfc_h) return "wfc mismatch for m=" + str(m) + " H=" + to_graph6(h);
      if (oracle::forest_number(prod) != m * oracle::forest_number(h)) return "f mismatch for H=" + to_graph6(h);
      if (!r.clauses.at("wfc_iff") || !r.clauses.at("product_formula")) return "clause false for H=" + to_graph6(h);
    }
  return {};
}

std::vector<std::pair<Graph, Graph>> small_pairs() {
  const auto gs = oracle::all_unlabeled_up_to(4);
  return cartesian_pairs(gs, gs);
}

std::string c5() {
  ScanConfig cfg;
  const ScanResult r = scan(small_pairs(), cfg);
  if (!r.skipped.empty()) return str(static_cast<long>(r.skipped.size())) + " pairs skipped";
  std::size_t per[3] = {0, 0, 0};
  for (const auto& f : r.findings) ++per[static_cast<int>(f.theorem)];
  if (per[0] == 0 || per[1] == 0 || per[2] == 0) return "a theorem had no applicable pairs";
  const auto bad = r.count(Verdict::theorem_violation);
  if (bad) return str(static_cast<long>(bad)) + " theorem_violation findings";
  return {};
}

std::string c6() {
  long checked = 0;
  for (const auto& [g, h] : small_pairs()) {
    WitnessAudit a;
    if (h.is_edgeless())
      a = audit_witnesses_empty_second(g, h.order());
    else if (!g.is_edgeless())
      a = audit_witnesses_nonempty_second(g, h);
    else
      continue;
    checked += a.checked;
    if (!a.failures.empty()) return "witness failure for G=" + to_graph6(g) + " H=" + to_graph6(h);
  }
  if (checked == 0) return "no witnesses checked";
  std::printf("  %ld witnesses checked\n", checked);
  return {};
}

std::string c7() {
  const auto graphs = oracle::all_unlabeled_up_to(6);
  if (oracle::all_unlabeled(6).size() != 156) return "order-6 class count wrong";
  for (const Graph& g : graphs) {
    std::set<std::uint64_t> forests, mis;
    for (const auto& s : enumerate_maximal_induced_forests(g)) forests.insert(s.mask());
    for (const auto& s : enumerate_maximal_independent_sets(g)) mis.insert(s.mask());
    if (forests != oracle::maximal_forests(g)) return "forest sets differ on " + to_graph6(g);
    if (mis != oracle::maximal_independent_sets(g) || mis != oracle::maximal_cliques_of_complement(g))
      return "independent sets differ on " + to_graph6(g);
  }
  std::printf("  %zu graphs of order 1..6\n", graphs.size());
  return {};
}

std::string c8() {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_labeled(n)) {
      const std::string s = to_graph6(g);
      if (!(from_graph6(s) == g) || to_graph6(from_graph6(s)) != s) return "round trip fails on " + s;
    }
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> order(1, 20);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const std::string s = to_graph6(g);
    if (!(from_graph6(s) == g) || to_graph6(from_graph6(s)) != s) return "round trip fails on " + s;
  }
  const std::string dir = WFC_GOLDEN_DIR;
  const std::pair<const char*, const char*> cases[] = {
      {"analyze --family cycle:4", "analyze_cycle4.json"},
      {"check-theorem thm31 --g empty:3 --h cycle:4", "check_thm31_empty3_cycle4.json"},
      {"check-theorem thm35 --g cycle:5 --h cycle:4", "check_thm35_cycle5_cycle4.json"},
      {"verify-paper", "verify_paper.json"},
  };
  for (const auto& [args, file] : cases) {
    const std::string golden = read_file(dir + "/" + file);
    if (golden.empty()) return std::string("missing golden ") + file;
    if (run_cli(args) != golden) return std::string("CLI output differs from ") + file;
  }
  if (dump(analyze_json(fam("cycle:4"))) != read_file(dir + "/analyze_cycle4.json"))
    return "library output differs from analyze golden";
  return {};
}

}  // namespace

int main() {
  run(1, "P4 o 2K1: f = 6, orders {5,6}, conditions hold, non-sufficiency", 1, c1);
  run(2, "C5 o C4: f = 6 = alpha f, listed set maximal of order 6, non-sufficiency", 10, c2);
  run(3, "fig1: well-covered, condition values 5 and 6, product not wfc, claim refuted", 10, c3);
  run(4, "empty G (m = 1..3) with connected H <= 5: wfc iff and f = m f(H)", 120, c4);
  run(5, "scan of all G, H <= 4: zero theorem violations", 300, c5);
  run(6, "every constructed V_M and V* on that scan is a maximal forest", 0, c6);
  run(7, "enumerations agree with naive oracles on all graphs of order <= 6", 0, c7);
  run(8, "graph6 round trip and CLI golden byte equality", 0, c8);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
