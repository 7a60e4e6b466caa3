#include "wfc/search.hpp"

#include <omp.h>

#include <istream>
#include <ostream>

#include "wfc/error.hpp"
#include "wfc/graph6.hpp"
#include "wfc/independence.hpp"

namespace wfc {

Graph6Stream read_graph6_stream(std::istream& in, ParseMode mode) {
  Graph6Stream out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back({number, from_graph6(line)});
    } catch (const Error& e) {
      if (mode == ParseMode::strict) throw StreamParseError(e.what(), number);
      out.diagnostics.push_back("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::size_t ScanResult::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& f : findings) n += f.verdict == v;
  return n;
}

bool applies(TheoremId theorem, const Graph& g, const Graph& h) {
  switch (theorem) {
    case TheoremId::thm31: return g.is_edgeless();
    case TheoremId::thm32: return h.is_edgeless();
    case TheoremId::thm35: return !g.is_edgeless() && !h.is_edgeless();
    case TheoremId::examples: return false;
  }
  return false;
}

Finding check_pair(const Graph& g, const Graph& h, TheoremId theorem, const EnumerationOptions& opts) {
  TheoremReport r;
  switch (theorem) {
    case TheoremId::thm31: r = check_thm31(g, h, opts); break;
    case TheoremId::thm32:
      if (!h.is_edgeless()) throw HypothesisError("thm32 needs an edgeless second factor");
      r = check_thm32(g, h.order(), opts);
      break;
    case TheoremId::thm35: r = check_thm35(g, h, opts); break;
    case TheoremId::examples: throw HypothesisError("examples is not a pair check");
  }
  Finding f;
  f.g_graph6 = to_graph6(g);
  f.h_graph6 = to_graph6(h);
  f.theorem = theorem;
  f.verdict = r.verdict;
  f.f_product = std::get<int>(r.ground_truth.at("f_product"));
  const auto a = r.ground_truth.find("alpha_g");
  f.alpha_g = a != r.ground_truth.end() ? std::get<int>(a->second) : independence_number(g, opts);
  const auto fh = r.ground_truth.find("f_h");
  f.f_h = fh != r.ground_truth.end() ? std::get<int>(fh->second) : forest_number(h, opts);
  if (r.product_witness) f.witness_orders = {r.product_witness->first.size(), r.product_witness->second.size()};
  return f;
}

ScanResult scan(const std::vector<std::pair<Graph, Graph>>& pairs, const ScanConfig& config, std::ostream* log) {
  struct Task {
    std::size_t pair;
    TheoremId theorem;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (TheoremId t : config.theorems)
      if (applies(t, pairs[i].first, pairs[i].second)) tasks.push_back({i, t});

  std::vector<std::optional<Finding>> done(tasks.size());
  std::vector<std::string> errors(tasks.size());
  EnumerationOptions inner = config.enumeration;
  inner.threads = 1;  // parallelism is across pairs
  const int bound = std::min(config.enumeration.max_order, kMaxEnumerationBound);
  const long total = static_cast<long>(tasks.size());
  const int team = config.workers > 0 ? config.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (long i = 0; i < total; ++i) {
    const auto& [g, h] = pairs[tasks[i].pair];
    if (g.order() * h.order() > bound) {
      errors[i] = "product order " + std::to_string(g.order() * h.order()) + " exceeds enumeration bound " +
                  std::to_string(bound);
      continue;
    }
    try {
      done[i] = check_pair(g, h, tasks[i].theorem, inner);
      done[i]->pair_index = tasks[i].pair;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  ScanResult out;
  out.pairs = pairs.size();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (done[i]) {
      out.findings.push_back(std::move(*done[i]));
    } else {
      out.skipped.push_back({tasks[i].pair, tasks[i].theorem, errors[i]});
      if (log)
        *log << "warning: skipped pair " << tasks[i].pair << " (" << to_string(tasks[i].theorem)
             << "): " << errors[i] << '\n';
    }
  }
  return out;
}

std::vector<std::pair<Graph, Graph>> cartesian_pairs(const std::vector<Graph>& gs, const std::vector<Graph>& hs) {
  std::vector<std::pair<Graph, Graph>> out;
  out.reserve(gs.size() * hs.size());
  for (const auto& g : gs)
    for (const auto& h : hs) out.emplace_back(g, h);
  return out;
}

nlohmann::json to_json(const Finding& f) {
  nlohmann::json j;
  j["schema"] = 1;
  j["pair_index"] = f.pair_index;
  j["g_graph6"] = f.g_graph6;
  j["h_graph6"] = f.h_graph6;
  j["theorem"] = std::string(to_string(f.theorem));
  j["verdict"] = std::string(to_string(f.verdict));
  j["f_product"] = f.f_product;
  j["alpha_g"] = f.alpha_g;
  j["f_h"] = f.f_h;
  j["witness_orders"] = f.witness_orders ? nlohmann::json::array({f.witness_orders->first, f.witness_orders->second})
                                         : nlohmann::json(nullptr);
  return j;
}

std::size_t append_findings(std::ostream& out, const std::vector<Finding>& findings) {
  std::size_t written = 0;
  for (const auto& f : findings) {
    if (f.verdict == Verdict::consistent) continue;
    out << to_json(f).dump() << '\n';
    ++written;
  }
  return written;
}

}  // namespace wfc
