#include "wfc/theorems.hpp"

#include <algorithm>
#include <string>

#include "wfc/error.hpp"
#include "wfc/independence.hpp"

namespace wfc {
namespace {

int max_order(const std::vector<VertexSubset>& sets) {
  int best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return best;
}

// First maximal forest of largest order, in canonical order.
VertexSubset first_maximum(const std::vector<VertexSubset>& sets) {
  const int best = max_order(sets);
  return *std::find_if(sets.begin(), sets.end(), [&](const VertexSubset& s) { return s.size() == best; });
}

struct ProductFacts {
  LexProduct product;
  std::vector<VertexSubset> forests;
  int f = 0;
  Uniformity uniformity;
};

ProductFacts product_facts(const Graph& g, const Graph& h, const EnumerationOptions& opts) {
  ProductFacts out{lexicographic(g, h), {}, 0, {}};
  out.forests = enumerate_maximal_induced_forests(out.product.graph, opts);
  out.f = max_order(out.forests);
  out.uniformity = uniformity_of(out.forests);
  return out;
}

void record_product(TheoremReport& r, const ProductFacts& p) {
  r.ground_truth["product_order"] = p.product.graph.order();
  r.ground_truth["product_maximal_forests"] = static_cast<int>(p.forests.size());
  r.ground_truth["f_product"] = p.f;
  r.ground_truth["wfc_product"] = p.uniformity.uniform;
  r.product_witness = p.uniformity.witness;
}

// Necessary-condition theorems: a well-f-covered product with a failing
// condition (or any unsound witness) is a violation; a non-well-f-covered
// product with every condition holding shows the condition is not sufficient.
void settle_necessary(TheoremReport& r) {
  bool holds = true;
  for (const auto& c : r.conditions) holds = holds && c.holds;
  for (const auto& [name, value] : r.clauses) holds = holds && value;
  r.conditions_hold = holds;
  const bool witnesses_ok = std::all_of(r.witnesses.begin(), r.witnesses.end(),
                                        [](const WitnessRecord& w) { return w.ok(); });
  const bool wfc = std::get<bool>(r.ground_truth.at("wfc_product"));
  if (!witnesses_ok || (wfc && !holds)) r.verdict = Verdict::theorem_violation;
  else if (!wfc && holds) r.verdict = Verdict::non_sufficiency_witness;
  else r.verdict = Verdict::consistent;
}

void require_maximal_forest(const Graph& g, const VertexSubset& f, const char* what) {
  if (!is_maximal_induced_forest(g, f)) throw DomainError(std::string(what) + " is not a maximal induced forest");
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::thm31: return "thm31";
    case TheoremId::thm32: return "thm32";
    case TheoremId::thm35: return "thm35";
    case TheoremId::examples: return "examples";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::non_sufficiency_witness: return "non_sufficiency_witness";
    case Verdict::theorem_violation: return "theorem_violation";
  }
  return "?";
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "confirmed";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::corrected: return "corrected";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (auto id : {TheoremId::thm31, TheoremId::thm32, TheoremId::thm35})
    if (text == to_string(id)) return id;
  return std::nullopt;
}

WitnessSpec make_witness_spec(const Graph& g, const VertexSubset& forest, ZChoice choice) {
  WitnessSpec spec;
  spec.forest = forest;
  spec.partition = forest_partition(g, forest, choice);
  spec.z_choice = choice;
  return spec;
}

// ---------------------------------------------------------------------------
// Empty first factor

TheoremReport check_thm31(const Graph& g, const Graph& h, const EnumerationOptions& opts) {
  if (!g.is_edgeless())
    throw HypothesisError("thm31 needs an edgeless first factor; G has " + std::to_string(g.edge_count()) + " edges");
  TheoremReport r;
  r.theorem = TheoremId::thm31;
  const int m = g.order();
  r.hypotheses["g_empty"] = true;
  r.hypotheses["m"] = m;
  r.hypotheses["h_order"] = h.order();

  const ProductFacts p = product_facts(g, h, opts);
  record_product(r, p);
  const auto h_forests = enumerate_maximal_induced_forests(h, opts);
  const int f_h = max_order(h_forests);
  const bool wfc_h = uniformity_of(h_forests).uniform;
  r.ground_truth["f_h"] = f_h;
  r.ground_truth["wfc_h"] = wfc_h;

  ConditionRecord formula;
  formula.condition = "product_formula";
  formula.lhs = p.f;
  formula.rhs = static_cast<long>(m) * f_h;
  formula.holds = formula.lhs == formula.rhs;
  r.conditions.push_back(formula);
  r.clauses["wfc_iff"] = p.uniformity.uniform == wfc_h;
  r.clauses["product_formula"] = formula.holds;

  r.conditions_hold = formula.holds && r.clauses["wfc_iff"];
  r.verdict = r.conditions_hold ? Verdict::consistent : Verdict::theorem_violation;
  return r;
}

// ---------------------------------------------------------------------------
// Empty second factor

long thm32_lhs(const ForestStats& s, int n) {
  return static_cast<long>(n) * (s.isolated + s.k2_components + s.outer_leaves) + s.k2_components + s.internal;
}

WitnessRecord construct_vstar_empty_second(const Graph& g, const WitnessSpec& spec, int n) {
  require_maximal_forest(g, spec.forest, "V* source forest");
  if (n < 1) throw DomainError("empty second factor needs order >= 1");
  if (spec.anchor < 0 || spec.anchor >= n)
    throw DomainError("anchor " + std::to_string(spec.anchor) + " is not a vertex of the second factor");
  const Graph h = Graph::empty(n);
  const LexProduct p = lexicographic(g, h);
  const ForestPartition& part = spec.partition;
  const Mask full = product_block(p.map, part.x.mask() | part.z.mask(), h.vertex_mask());
  const Mask thin = product_block(p.map, part.y.mask() | part.t.mask(), bit(spec.anchor));

  WitnessRecord w;
  w.kind = "v_star_empty_second";
  w.set = VertexSubset(p.graph.order(), full | thin);
  w.source = spec.forest;
  w.anchor = spec.anchor;
  w.z_choice = spec.z_choice;
  w.expected_size = n * (part.x.size() + part.z.size()) + part.y.size() + part.t.size();
  w.maximal = is_maximal_induced_forest(p.graph, w.set);
  return w;
}

TheoremReport check_thm32(const Graph& g, int n, const EnumerationOptions& opts, const WitnessOptions& witness) {
  if (n < 1) throw DomainError("thm32 needs an empty second factor of order >= 1, got " + std::to_string(n));
  const Vertex anchor = witness.anchor.value_or(0);
  if (anchor < 0 || anchor >= n) throw DomainError("anchor " + std::to_string(anchor) + " is not a vertex of nK1");
  TheoremReport r;
  r.theorem = TheoremId::thm32;
  r.hypotheses["h_empty"] = true;
  r.hypotheses["n"] = n;
  r.hypotheses["g_order"] = g.order();

  const Graph h = Graph::empty(n);
  const ProductFacts p = product_facts(g, h, opts);
  record_product(r, p);
  const auto g_forests = enumerate_maximal_induced_forests(g, opts);
  const int f_g = max_order(g_forests);
  const bool wfc_g = uniformity_of(g_forests).uniform;
  r.ground_truth["f_g"] = f_g;
  r.ground_truth["wfc_g"] = wfc_g;

  bool all_equal = true;
  for (const auto& f : g_forests) {
    ConditionRecord c;
    c.condition = "thm32";
    c.forest = f;
    c.stats = forest_stats(g, f);
    c.lhs = thm32_lhs(*c.stats, n);
    c.rhs = p.f;
    c.holds = c.lhs == c.rhs;
    all_equal = all_equal && c.holds;
    r.conditions.push_back(c);
    WitnessSpec spec = make_witness_spec(g, f, witness.z_choice);
    spec.anchor = anchor;
    r.witnesses.push_back(construct_vstar_empty_second(g, spec, n));
  }
  if (n == 1) {
    // With a single copy the condition reads |F| = f(G o K1) = f(G) for every F.
    r.clauses["n1_condition_iff_wfc_g"] = all_equal == wfc_g;
    r.clauses["n1_f_equal"] = p.f == f_g;
  }
  settle_necessary(r);
  return r;
}

// ---------------------------------------------------------------------------
// Both factors nonempty

long thm35_condition4_lhs(const ForestStats& s, int f_h, int m_h_size) {
  return static_cast<long>(f_h) * s.isolated + static_cast<long>(m_h_size) * (s.k2_components + s.outer_leaves) +
         s.k2_components + s.internal;
}

WitnessRecord construct_vm(const Graph& g, const VertexSubset& m, const Graph& h, const VertexSubset& f_h) {
  if (!is_maximal_independent_set(g, m)) throw DomainError("V_M source is not a maximal independent set of G");
  require_maximal_forest(h, f_h, "F_H");
  if (h.is_edgeless()) throw DomainError("V_M needs a second factor with at least one edge");
  const LexProduct p = lexicographic(g, h);
  WitnessRecord w;
  w.kind = "v_m";
  w.set = VertexSubset(p.graph.order(), product_block(p.map, m.mask(), f_h.mask()));
  w.source = m;
  w.h_forest = f_h;
  w.expected_size = m.size() * f_h.size();
  w.maximal = is_maximal_induced_forest(p.graph, w.set);
  return w;
}

WitnessRecord construct_vstar_nonempty_second(const Graph& g, const WitnessSpec& spec, const Graph& h) {
  require_maximal_forest(g, spec.forest, "V* source forest");
  if (g.is_edgeless() || h.is_edgeless()) throw DomainError("V* needs both factors to have an edge");
  if (!spec.h_forest || !spec.h_independent) throw DomainError("V* needs both F_H and M_H");
  require_maximal_forest(h, *spec.h_forest, "F_H");
  if (!is_maximal_independent_set(h, *spec.h_independent))
    throw DomainError("M_H is not a maximal independent set of H");
  if (!spec.h_independent->contains(spec.anchor))
    throw DomainError("anchor " + std::to_string(spec.anchor) + " is not in M_H");

  const LexProduct p = lexicographic(g, h);
  const ForestPartition& part = spec.partition;
  const VertexSubset& fh = *spec.h_forest;
  const VertexSubset& mh = *spec.h_independent;
  const Mask set = product_block(p.map, part.x1.mask(), fh.mask()) |
                   product_block(p.map, part.x2.mask() | part.z.mask(), mh.mask()) |
                   product_block(p.map, part.y.mask() | part.t.mask(), bit(spec.anchor));
  WitnessRecord w;
  w.kind = "v_star_nonempty_second";
  w.set = VertexSubset(p.graph.order(), set);
  w.source = spec.forest;
  w.h_forest = fh;
  w.h_independent = mh;
  w.anchor = spec.anchor;
  w.z_choice = spec.z_choice;
  w.expected_size = fh.size() * part.x1.size() + mh.size() * (part.x2.size() + part.z.size()) + part.y.size() +
                    part.t.size();
  w.maximal = is_maximal_induced_forest(p.graph, w.set);
  return w;
}

TheoremReport check_thm35(const Graph& g, const Graph& h, const EnumerationOptions& opts,
                          const WitnessOptions& witness) {
  if (g.is_edgeless()) throw HypothesisError("thm35 needs a first factor with at least one edge");
  if (h.is_edgeless()) throw HypothesisError("thm35 needs a second factor with at least one edge");
  TheoremReport r;
  r.theorem = TheoremId::thm35;
  r.hypotheses["g_nonempty"] = true;
  r.hypotheses["h_nonempty"] = true;
  r.hypotheses["g_order"] = g.order();
  r.hypotheses["h_order"] = h.order();

  const ProductFacts p = product_facts(g, h, opts);
  record_product(r, p);
  const auto g_forests = enumerate_maximal_induced_forests(g, opts);
  const auto g_mis = enumerate_maximal_independent_sets(g, opts);
  const auto h_forests = enumerate_maximal_induced_forests(h, opts);
  const auto h_mis = enumerate_maximal_independent_sets(h, opts);

  const int f_g = max_order(g_forests);
  const int f_h = max_order(h_forests);
  const int alpha_g = max_order(g_mis);
  const bool wfc_g = uniformity_of(g_forests).uniform;
  const bool wfc_h = uniformity_of(h_forests).uniform;
  const bool wc_g = uniformity_of(g_mis).uniform;
  const bool wc_h = uniformity_of(h_mis).uniform;
  r.ground_truth["f_g"] = f_g;
  r.ground_truth["f_h"] = f_h;
  r.ground_truth["alpha_g"] = alpha_g;
  r.ground_truth["alpha_h"] = max_order(h_mis);
  r.ground_truth["wfc_g"] = wfc_g;
  r.ground_truth["wfc_h"] = wfc_h;
  r.ground_truth["wc_g"] = wc_g;
  r.ground_truth["wc_h"] = wc_h;

  std::vector<ForestStats> stats;
  stats.reserve(g_forests.size());
  for (const auto& f : g_forests) stats.push_back(forest_stats(g, f));
  const bool no_isolated = std::all_of(stats.begin(), stats.end(), [](const ForestStats& s) { return s.isolated == 0; });
  const bool h_has_singleton_mis =
      std::any_of(h_mis.begin(), h_mis.end(), [](const VertexSubset& s) { return s.size() == 1; });
  const bool g_forest_with_leaf = std::any_of(stats.begin(), stats.end(), [](const ForestStats& s) {
    return s.k2_components + s.outer_leaves > 0;
  });
  r.ground_truth["premise1_no_isolated_and_h_singleton_mis"] = no_isolated && h_has_singleton_mis;
  r.ground_truth["premise2_g_forest_with_leaf"] = g_forest_with_leaf;

  // Sub-clauses are material implications.
  r.clauses["1"] = wc_g && (!(no_isolated && h_has_singleton_mis) || (wfc_g && f_g == p.f));
  r.clauses["2"] = wfc_h && (!g_forest_with_leaf || wc_h);
  r.clauses["3"] = p.f == alpha_g * f_h;

  bool c4 = true;
  for (std::size_t i = 0; i < g_forests.size(); ++i) {
    for (const auto& mh : h_mis) {
      ConditionRecord c;
      c.condition = "4";
      c.forest = g_forests[i];
      c.h_independent = mh;
      c.stats = stats[i];
      c.lhs = thm35_condition4_lhs(stats[i], f_h, mh.size());
      c.rhs = p.f;
      c.holds = c.lhs == c.rhs;
      c4 = c4 && c.holds;
      r.conditions.push_back(c);
    }
  }
  r.clauses["4"] = c4;

  const VertexSubset fh = first_maximum(h_forests);
  bool quotient = true;
  for (const auto& m : g_mis) {
    r.witnesses.push_back(construct_vm(g, m, h, fh));
    quotient = quotient && m.size() * fh.size() == p.f;
  }
  // Every V_M is a maximal forest, so well-f-coveredness forces |M| |F_H| = f(G o H).
  if (p.uniformity.uniform) r.clauses["vm_quotient_identity"] = quotient;
  for (const auto& f : g_forests) {
    for (const auto& mh : h_mis) {
      WitnessSpec spec = make_witness_spec(g, f, witness.z_choice);
      spec.h_forest = fh;
      spec.h_independent = mh;
      spec.anchor = witness.anchor && mh.contains(*witness.anchor) ? *witness.anchor : lowest(mh.mask());
      r.witnesses.push_back(construct_vstar_nonempty_second(g, spec, h));
    }
  }
  settle_necessary(r);
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive witness audits

WitnessAudit audit_witnesses_empty_second(const Graph& g, int n, const EnumerationOptions& opts) {
  require_enumerable(g, opts);
  WitnessAudit audit;
  for (const auto& f : enumerate_maximal_induced_forests(g, opts)) {
    for (ZChoice choice : {ZChoice::min_index, ZChoice::max_index}) {
      WitnessSpec spec = make_witness_spec(g, f, choice);
      for (Vertex anchor = 0; anchor < n; ++anchor) {
        spec.anchor = anchor;
        WitnessRecord w = construct_vstar_empty_second(g, spec, n);
        const long lhs = thm32_lhs(forest_stats(g, f), n);
        ++audit.checked;
        if (!w.ok() || lhs != w.set.size()) audit.failures.push_back(std::move(w));
      }
    }
  }
  return audit;
}

WitnessAudit audit_witnesses_nonempty_second(const Graph& g, const Graph& h, const EnumerationOptions& opts) {
  WitnessAudit audit;
  const auto g_forests = enumerate_maximal_induced_forests(g, opts);
  const auto g_mis = enumerate_maximal_independent_sets(g, opts);
  const auto h_forests = enumerate_maximal_induced_forests(h, opts);
  const auto h_mis = enumerate_maximal_independent_sets(h, opts);
  for (const auto& m : g_mis) {
    for (const auto& fh : h_forests) {
      WitnessRecord w = construct_vm(g, m, h, fh);
      ++audit.checked;
      if (!w.ok()) audit.failures.push_back(std::move(w));
    }
  }
  for (const auto& f : g_forests) {
    for (ZChoice choice : {ZChoice::min_index, ZChoice::max_index}) {
      WitnessSpec spec = make_witness_spec(g, f, choice);
      for (const auto& fh : h_forests) {
        spec.h_forest = fh;
        for (const auto& mh : h_mis) {
          spec.h_independent = mh;
          for (Vertex anchor : mh.members()) {
            spec.anchor = anchor;
            WitnessRecord w = construct_vstar_nonempty_second(g, spec, h);
            ++audit.checked;
            if (!w.ok()) audit.failures.push_back(std::move(w));
          }
        }
      }
    }
  }
  return audit;
}

}  // namespace wfc
