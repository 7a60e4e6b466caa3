#pragma once

#include <vector>

#include "wfc/forests.hpp"
#include "wfc/graph.hpp"

namespace wfc {

bool is_independent_set(const Graph& g, const VertexSubset& s);
bool is_maximal_independent_set(const Graph& g, const VertexSubset& s);

// Ascending by bitset value; never empty.
std::vector<VertexSubset> enumerate_maximal_independent_sets(const Graph& g, const EnumerationOptions& opts = {});

int independence_number(const Graph& g, const EnumerationOptions& opts = {});

Uniformity is_well_covered(const Graph& g, const EnumerationOptions& opts = {});

}  // namespace wfc
