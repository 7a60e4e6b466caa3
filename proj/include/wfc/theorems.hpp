#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wfc/forests.hpp"
#include "wfc/graph.hpp"
#include "wfc/product.hpp"

namespace wfc {

enum class TheoremId { thm31, thm32, thm35, examples };
enum class Verdict { consistent, non_sufficiency_witness, theorem_violation };
enum class ClaimStatus { confirmed, refuted, corrected };

std::string_view to_string(TheoremId id);
std::string_view to_string(Verdict v);
std::string_view to_string(ClaimStatus s);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

using Scalar = std::variant<bool, int>;

/// One evaluation of a necessary condition: lhs == rhs expected.
struct ConditionRecord {
  std::string condition;
  std::optional<VertexSubset> forest;         // maximal forest F of G
  std::optional<VertexSubset> h_independent;  // maximal independent M_H of H
  std::optional<ForestStats> stats;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
};

/// Inputs for the product witness constructions.  anchor is the fixed
/// second-factor vertex paired with the high-degree and T vertices of F.
struct WitnessSpec {
  VertexSubset forest;
  ForestPartition partition;
  std::optional<VertexSubset> h_forest;
  std::optional<VertexSubset> h_independent;
  Vertex anchor = 0;
  ZChoice z_choice = ZChoice::min_index;
};

WitnessSpec make_witness_spec(const Graph& g, const VertexSubset& forest, ZChoice choice = ZChoice::min_index);

/// A constructed product vertex set together with its verification.
struct WitnessRecord {
  std::string kind;  // v_star_empty_second | v_m | v_star_nonempty_second
  VertexSubset set;
  VertexSubset source;  // F (for V*) or M (for V_M) in G
  std::optional<VertexSubset> h_forest;
  std::optional<VertexSubset> h_independent;
  Vertex anchor = -1;
  std::optional<ZChoice> z_choice;
  int expected_size = 0;
  bool maximal = false;

  bool size_matches() const noexcept { return set.size() == expected_size; }
  bool ok() const noexcept { return maximal && size_matches(); }
};

/// Overrides for the default witnesses a check records.  The anchor defaults
/// to vertex 0 of an empty second factor, or to the smallest vertex of M_H;
/// an override that is not in a given M_H falls back to that default.
struct WitnessOptions {
  ZChoice z_choice = ZChoice::min_index;
  std::optional<Vertex> anchor;
};

struct ExampleClaim {
  std::string example;
  std::string claim;
  ClaimStatus status = ClaimStatus::confirmed;
  std::string detail;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::thm31;
  std::map<std::string, Scalar> hypotheses;
  std::map<std::string, Scalar> ground_truth;
  std::map<std::string, bool> clauses;
  std::vector<ConditionRecord> conditions;
  std::vector<WitnessRecord> witnesses;
  // Two maximal forests of the product with different orders, if any.
  std::optional<std::pair<VertexSubset, VertexSubset>> product_witness;
  std::vector<ExampleClaim> claims;
  std::vector<TheoremReport> cases;  // sub-reports of the examples run
  bool conditions_hold = true;
  Verdict verdict = Verdict::consistent;
};

// Empty first factor: G o H well-f-covered iff H is, and f(G o H) = m f(H).
// Throws HypothesisError if g has an edge.
TheoremReport check_thm31(const Graph& g, const Graph& h, const EnumerationOptions& opts = {});

// n (I + K2 + L) + K2 + L'
long thm32_lhs(const ForestStats& stats, int n);

// Empty second factor of order n.  Throws DomainError if n < 1.
TheoremReport check_thm32(const Graph& g, int n, const EnumerationOptions& opts = {},
                          const WitnessOptions& witness = {});

// (X u Z) x V(nK1)  u  (Y u T) x {anchor}
WitnessRecord construct_vstar_empty_second(const Graph& g, const WitnessSpec& spec, int n);

// Both factors with at least one edge.  Throws HypothesisError otherwise.
TheoremReport check_thm35(const Graph& g, const Graph& h, const EnumerationOptions& opts = {},
                          const WitnessOptions& witness = {});

// f(H) I + |M_H| (K2 + L) + K2 + L'
long thm35_condition4_lhs(const ForestStats& stats, int f_h, int m_h_size);

// M x V(F_H)
WitnessRecord construct_vm(const Graph& g, const VertexSubset& m, const Graph& h, const VertexSubset& f_h);

// X1 x V(F_H)  u  (X2 u Z) x M_H  u  (Y u T) x {anchor}
WitnessRecord construct_vstar_nonempty_second(const Graph& g, const WitnessSpec& spec, const Graph& h);

/// Exhaustive re-check of every witness construction for one pair: every
/// maximal forest F, both Z choices, every F_H, every M_H and every anchor.
struct WitnessAudit {
  long checked = 0;
  std::vector<WitnessRecord> failures;
};

WitnessAudit audit_witnesses_empty_second(const Graph& g, int n, const EnumerationOptions& opts = {});
WitnessAudit audit_witnesses_nonempty_second(const Graph& g, const Graph& h, const EnumerationOptions& opts = {});

// Re-runs the published worked examples and classifies each checkable claim.
TheoremReport verify_paper_examples(const EnumerationOptions& opts = {});

}  // namespace wfc
