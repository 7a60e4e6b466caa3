#include "wfc/forests.hpp"

#include <algorithm>
#include <string>

#include "wfc/error.hpp"
#include "wfc/kernels.hpp"

namespace wfc {
namespace {

void require_same_host(const Graph& g, const VertexSubset& s) {
  if (s.graph_order() != g.order())
    throw DomainError("subset of a " + std::to_string(s.graph_order()) + "-vertex graph used with a " +
                      std::to_string(g.order()) + "-vertex graph");
}

// Scatter the bits of a component-local mask back to host vertex numbers.
Mask lift(Mask local, const std::vector<Vertex>& host) {
  Mask out = 0;
  for_each_bit(local, [&](Vertex v) { out |= bit(host[v]); });
  return out;
}

}  // namespace

void require_enumerable(const Graph& g, const EnumerationOptions& opts) {
  const int bound = std::min(opts.max_order, kMaxEnumerationBound);
  if (g.order() > bound)
    throw ResourceError("graph of order " + std::to_string(g.order()) + " exceeds the enumeration bound " +
                            std::to_string(bound),
                        bound);
}

bool is_induced_forest(const Graph& g, const VertexSubset& s) {
  require_same_host(g, s);
  return kernels::induces_forest(g.rows(), s.mask());
}

bool is_maximal_induced_forest(const Graph& g, const VertexSubset& s) {
  require_same_host(g, s);
  return kernels::induces_maximal_forest(g.rows(), s.mask(), g.vertex_mask());
}

std::vector<VertexSubset> enumerate_maximal_induced_forests(const Graph& g, const EnumerationOptions& opts) {
  require_enumerable(g, opts);
  const auto comps = component_masks(g, g.vertex_mask());
  std::vector<Mask> masks;
  if (comps.size() == 1) {
    masks = kernels::maximal_forests_parallel(g, opts.threads);
  } else {
    // Maximal forests of a disjoint union are exactly the unions of one
    // maximal forest per component.
    masks = {0};
    for (Mask comp : comps) {
      const VertexSubset part(g.order(), comp);
      const std::vector<Vertex> host = part.members();
      const Graph sub = induced_subgraph(g, part);
      const auto local = host.size() == 1 ? std::vector<Mask>{1} : kernels::maximal_forests_parallel(sub, opts.threads);
      std::vector<Mask> next;
      next.reserve(masks.size() * local.size());
      for (Mask prefix : masks)
        for (Mask l : local) next.push_back(prefix | lift(l, host));
      masks = std::move(next);
    }
    std::sort(masks.begin(), masks.end());
  }
  std::vector<VertexSubset> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(g.order(), m);
  return out;
}

int forest_number(const Graph& g, const EnumerationOptions& opts) {
  require_enumerable(g, opts);
  return kernels::max_forest_order_descending(g);
}

Uniformity uniformity_of(const std::vector<VertexSubset>& sets) {
  Uniformity out;
  if (sets.empty()) return out;
  const VertexSubset* smallest = &sets.front();
  const VertexSubset* largest = &sets.front();
  for (const auto& s : sets) {
    if (s.size() < smallest->size()) smallest = &s;
    if (s.size() > largest->size()) largest = &s;
  }
  if (smallest->size() != largest->size()) {
    out.uniform = false;
    out.witness = std::make_pair(*smallest, *largest);
  }
  return out;
}

Uniformity is_well_f_covered(const Graph& g, const EnumerationOptions& opts) {
  return uniformity_of(enumerate_maximal_induced_forests(g, opts));
}

std::map<int, int> size_histogram(const std::vector<VertexSubset>& sets) {
  std::map<int, int> out;
  for (const auto& s : sets) ++out[s.size()];
  return out;
}

ForestStats forest_stats(const Graph& g, const VertexSubset& f) {
  if (!is_induced_forest(g, f)) throw DomainError("forest_stats: subset does not induce a forest");
  std::array<Mask, 64> comps;
  const int count = kernels::split_components(g.rows(), f.mask(), comps);
  ForestStats st;
  for (int c = 0; c < count; ++c) {
    const int size = popcount(comps[c]);
    if (size == 1) {
      ++st.isolated;
    } else if (size == 2) {
      ++st.k2_components;
    } else {
      for_each_bit(comps[c], [&](Vertex v) {
        if (popcount(g.neighbors(v) & f.mask()) == 1) ++st.outer_leaves;
        else ++st.internal;
      });
    }
  }
  return st;
}

ForestPartition forest_partition(const Graph& g, const VertexSubset& f, ZChoice choice) {
  if (!is_maximal_induced_forest(g, f))
    throw DomainError("forest_partition: subset is not a maximal induced forest");
  std::array<Mask, 64> comps;
  const int count = kernels::split_components(g.rows(), f.mask(), comps);
  Mask x1 = 0, x2 = 0, y = 0, z = 0, t = 0;
  for (int c = 0; c < count; ++c) {
    const Mask comp = comps[c];
    switch (popcount(comp)) {
      case 1:
        x1 |= comp;
        break;
      case 2: {
        const Mask low = comp & (~comp + 1);
        const Mask pick = choice == ZChoice::min_index ? low : comp & ~low;
        z |= pick;
        t |= comp & ~pick;
        break;
      }
      default:
        for_each_bit(comp, [&](Vertex v) {
          if (popcount(g.neighbors(v) & f.mask()) == 1) x2 |= bit(v);
          else y |= bit(v);
        });
    }
  }
  const int n = g.order();
  return {VertexSubset(n, x1 | x2), VertexSubset(n, x1), VertexSubset(n, x2),
          VertexSubset(n, y),       VertexSubset(n, z),  VertexSubset(n, t)};
}

}  // namespace wfc
