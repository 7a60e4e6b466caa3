#pragma once

#include <string>

#include <json.hpp>

#include "wfc/forests.hpp"
#include "wfc/graph.hpp"
#include "wfc/product.hpp"
#include "wfc/search.hpp"
#include "wfc/theorems.hpp"

namespace wfc {

// Every top-level document carries this in its "schema" field.
inline constexpr int kReportSchema = 1;

// Keys are sorted (nlohmann's default std::map object), so dumps are byte-stable.
nlohmann::json graph_json(const Graph& g);
nlohmann::json product_json(const LexProduct& p);
nlohmann::json analyze_json(const Graph& g, const EnumerationOptions& opts = {});
nlohmann::json report_json(const TheoremReport& r);
nlohmann::json scan_summary_json(const ScanResult& r);

// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace wfc
