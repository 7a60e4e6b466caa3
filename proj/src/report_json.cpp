#include "wfc/report_json.hpp"

#include "wfc/graph6.hpp"
#include "wfc/independence.hpp"

namespace wfc {
namespace {

using nlohmann::json;

json members(const VertexSubset& s) { return s.members(); }

json pairs(const VertexSubset& s, const ProductIndexMap& map) {
  json out = json::array();
  for (Vertex v : s.members()) {
    const auto [g, h] = map.decode(v);
    out.push_back({g, h});
  }
  return out;
}

json scalar(const Scalar& s) {
  return std::visit([](auto v) { return json(v); }, s);
}

json scalars(const std::map<std::string, Scalar>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = scalar(v);
  return out;
}

json stats_json(const ForestStats& s) {
  return {{"isolated", s.isolated},
          {"k2_components", s.k2_components},
          {"outer_leaves", s.outer_leaves},
          {"internal", s.internal}};
}

json optional_members(const std::optional<VertexSubset>& s) { return s ? members(*s) : json(nullptr); }

json uniformity_witness(const Uniformity& u) {
  if (!u.witness) return nullptr;
  return json::array({members(u.witness->first), members(u.witness->second)});
}

std::optional<ProductIndexMap> product_map_of(const TheoremReport& r) {
  const auto& h = r.hypotheses;
  auto get = [&](const char* key) { return std::get<int>(h.at(key)); };
  switch (r.theorem) {
    case TheoremId::thm31: return ProductIndexMap(get("m"), get("h_order"));
    case TheoremId::thm32: return ProductIndexMap(get("g_order"), get("n"));
    case TheoremId::thm35: return ProductIndexMap(get("g_order"), get("h_order"));
    case TheoremId::examples: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"schema", kReportSchema},
          {"name", g.name()},
          {"order", g.order()},
          {"edges", g.edge_count()},
          {"edge_list", edges},
          {"graph6", g.order() <= kGraph6MaxOrder ? json(to_graph6(g)) : json(nullptr)}};
}

json product_json(const LexProduct& p) {
  json vertices = json::array();
  for (Vertex v = 0; v < p.map.order(); ++v) {
    const auto [g, h] = p.map.decode(v);
    vertices.push_back({g, h});
  }
  return {{"schema", kReportSchema},
          {"order", p.graph.order()},
          {"edges", p.graph.edge_count()},
          {"graph6", p.graph.order() <= kGraph6MaxOrder ? json(to_graph6(p.graph)) : json(nullptr)},
          {"warning", p.size_warning ? json(*p.size_warning) : json(nullptr)},
          {"index_map",
           {{"g_order", p.map.g_order()},
            {"h_order", p.map.h_order()},
            {"encoding", "g*h_order+h"},
            {"vertices", vertices}}}};
}

json analyze_json(const Graph& g, const EnumerationOptions& opts) {
  const auto forests = enumerate_maximal_induced_forests(g, opts);
  const Uniformity wfc = uniformity_of(forests);
  const auto mis = enumerate_maximal_independent_sets(g, opts);
  const Uniformity wc = uniformity_of(mis);
  json histogram = json::object();
  for (auto [order, count] : size_histogram(forests)) histogram[std::to_string(order)] = count;
  return {{"schema", kReportSchema},
          {"order", g.order()},
          {"edges", g.edge_count()},
          {"forest_number", forest_number(g, opts)},
          {"well_f_covered", wfc.uniform},
          {"witness", uniformity_witness(wfc)},
          {"independence_number", independence_number(g, opts)},
          {"well_covered", wc.uniform},
          {"maximal_forest_orders_histogram", histogram}};
}

json report_json(const TheoremReport& r) {
  const auto map = product_map_of(r);
  auto product_set = [&](const VertexSubset& s) { return map ? pairs(s, *map) : members(s); };

  json conditions = json::array();
  for (const auto& c : r.conditions) {
    conditions.push_back({{"condition", c.condition},
                          {"forest", optional_members(c.forest)},
                          {"h_independent", optional_members(c.h_independent)},
                          {"stats", c.stats ? stats_json(*c.stats) : json(nullptr)},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"holds", c.holds}});
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(
        {{"kind", w.kind},
         {"set", product_set(w.set)},
         {"source", members(w.source)},
         {"h_forest", optional_members(w.h_forest)},
         {"h_independent", optional_members(w.h_independent)},
         {"anchor", w.anchor >= 0 ? json(w.anchor) : json(nullptr)},
         {"z_choice", w.z_choice ? json(*w.z_choice == ZChoice::min_index ? "min_index" : "max_index") : json(nullptr)},
         {"size", w.set.size()},
         {"expected_size", w.expected_size},
         {"maximal", w.maximal}});
  }
  json out = {{"schema", kReportSchema},
              {"theorem", std::string(to_string(r.theorem))},
              {"hypotheses", scalars(r.hypotheses)},
              {"ground_truth", scalars(r.ground_truth)},
              {"clauses", r.clauses},
              {"conditions", conditions},
              {"witnesses", witnesses},
              {"conditions_hold", r.conditions_hold},
              {"verdict", std::string(to_string(r.verdict))}};
  out["product_witness"] = r.product_witness ? json::array({product_set(r.product_witness->first),
                                                            product_set(r.product_witness->second)})
                                             : json(nullptr);
  if (r.theorem == TheoremId::examples) {
    json claims = json::array();
    for (const auto& c : r.claims)
      claims.push_back({{"example", c.example},
                        {"claim", c.claim},
                        {"status", std::string(to_string(c.status))},
                        {"detail", c.detail}});
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(report_json(c));
    out["claims"] = claims;
    out["cases"] = cases;
  }
  return out;
}

json scan_summary_json(const ScanResult& r) {
  json skipped = json::array();
  for (const auto& s : r.skipped)
    skipped.push_back({{"pair_index", s.pair_index}, {"theorem", std::string(to_string(s.theorem))}, {"reason", s.reason}});
  return {{"schema", kReportSchema},
          {"pairs", r.pairs},
          {"checks", r.findings.size()},
          {"consistent", r.count(Verdict::consistent)},
          {"non_sufficiency_witness", r.count(Verdict::non_sufficiency_witness)},
          {"theorem_violation", r.count(Verdict::theorem_violation)},
          {"skipped", skipped}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace wfc
