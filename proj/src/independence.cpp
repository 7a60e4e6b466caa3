#include "wfc/independence.hpp"

#include <algorithm>

#include "wfc/error.hpp"
#include "wfc/kernels.hpp"

namespace wfc {

bool is_independent_set(const Graph& g, const VertexSubset& s) {
  if (s.graph_order() != g.order()) throw DomainError("subset belongs to a graph of a different order");
  return kernels::is_independent(g.rows(), s.mask());
}

bool is_maximal_independent_set(const Graph& g, const VertexSubset& s) {
  if (s.graph_order() != g.order()) throw DomainError("subset belongs to a graph of a different order");
  return kernels::is_maximal_independent(g.rows(), s.mask(), g.vertex_mask());
}

std::vector<VertexSubset> enumerate_maximal_independent_sets(const Graph& g, const EnumerationOptions& opts) {
  require_enumerable(g, opts);
  std::vector<VertexSubset> out;
  for (Mask m : kernels::maximal_independent_parallel(g, opts.threads)) out.emplace_back(g.order(), m);
  return out;
}

int independence_number(const Graph& g, const EnumerationOptions& opts) {
  int best = 0;
  for (const auto& s : enumerate_maximal_independent_sets(g, opts)) best = std::max(best, s.size());
  return best;
}

Uniformity is_well_covered(const Graph& g, const EnumerationOptions& opts) {
  return uniformity_of(enumerate_maximal_independent_sets(g, opts));
}

}  // namespace wfc
