#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wfc/forests.hpp"
#include "wfc/graph.hpp"
#include "wfc/theorems.hpp"

namespace wfc {

enum class ParseMode { strict, skip };

struct GraphRecord {
  std::size_t line = 0;  // 1-based
  Graph graph;
};

struct Graph6Stream {
  std::vector<GraphRecord> graphs;
  std::vector<std::string> diagnostics;  // skipped lines, skip mode only
};

// One graph6 record per line; blank lines and trailing '\r' are ignored.
// Strict mode throws StreamParseError naming the first bad line.
Graph6Stream read_graph6_stream(std::istream& in, ParseMode mode = ParseMode::strict);

/// Outcome of one (G, H, theorem) check, as persisted in the findings file.
struct Finding {
  std::size_t pair_index = 0;
  std::string g_graph6;
  std::string h_graph6;
  TheoremId theorem = TheoremId::thm31;
  Verdict verdict = Verdict::consistent;
  int f_product = 0;
  int alpha_g = 0;
  int f_h = 0;
  std::optional<std::pair<int, int>> witness_orders;  // when the product is not well-f-covered
};

struct ScanConfig {
  std::vector<TheoremId> theorems{TheoremId::thm31, TheoremId::thm32, TheoremId::thm35};
  EnumerationOptions enumeration;
  int workers = 0;  // 0: OpenMP default
};

struct SkippedPair {
  std::size_t pair_index = 0;
  TheoremId theorem = TheoremId::thm31;
  std::string reason;
};

struct ScanResult {
  std::vector<Finding> findings;  // input order, then theorem order
  std::vector<SkippedPair> skipped;
  std::size_t pairs = 0;

  std::size_t count(Verdict v) const;
};

// Hypothesis filter: thm31 needs edgeless G, thm32 edgeless H, thm35 edges in both.
bool applies(TheoremId theorem, const Graph& g, const Graph& h);

// Runs the selected check and summarises it.  Throws like the check itself.
Finding check_pair(const Graph& g, const Graph& h, TheoremId theorem, const EnumerationOptions& opts = {});

// Checks pairs concurrently.  Pairs whose product exceeds the enumeration
// bound are reported in skipped and, when log is set, warned about there.
ScanResult scan(const std::vector<std::pair<Graph, Graph>>& pairs, const ScanConfig& config,
                std::ostream* log = nullptr);

std::vector<std::pair<Graph, Graph>> cartesian_pairs(const std::vector<Graph>& gs, const std::vector<Graph>& hs);

nlohmann::json to_json(const Finding& f);
// Writes every non-consistent finding as one JSON line; returns how many.
std::size_t append_findings(std::ostream& out, const std::vector<Finding>& findings);

}  // namespace wfc
