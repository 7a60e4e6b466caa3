#include "wfc/product.hpp"

#include <string>

#include "wfc/error.hpp"
#include "wfc/graph6.hpp"

namespace wfc {

Vertex ProductIndexMap::encode(Vertex g, Vertex h) const {
  if (g < 0 || g >= g_order_ || h < 0 || h >= h_order_)
    throw DomainError("product pair (" + std::to_string(g) + "," + std::to_string(h) + ") out of range " +
                      std::to_string(g_order_) + "x" + std::to_string(h_order_));
  return g * h_order_ + h;
}

std::pair<Vertex, Vertex> ProductIndexMap::decode(Vertex index) const {
  if (index < 0 || index >= order())
    throw DomainError("product vertex " + std::to_string(index) + " out of range");
  return {index / h_order_, index % h_order_};
}

LexProduct lexicographic(const Graph& g, const Graph& h) {
  const int gn = g.order();
  const int hn = h.order();
  if (gn * hn > Graph::kMaxOrder)
    throw UnsupportedSize("product order " + std::to_string(gn * hn) + " exceeds " +
                          std::to_string(Graph::kMaxOrder));
  const ProductIndexMap map(gn, hn);
  const Mask fibre = low_bits(hn);
  std::vector<Mask> rows(gn * hn, 0);
  for (Vertex a = 0; a < gn; ++a) {
    Mask outer = 0;
    for_each_bit(g.neighbors(a), [&](Vertex b) { outer |= fibre << (b * hn); });
    for (Vertex x = 0; x < hn; ++x) rows[a * hn + x] = outer | (h.neighbors(x) << (a * hn));
  }
  LexProduct out{Graph::from_rows(std::move(rows)), map, std::nullopt};
  if (out.graph.order() > kGraph6MaxOrder)
    out.size_warning = "product order " + std::to_string(out.graph.order()) +
                       " exceeds the graph6 short-form limit of " + std::to_string(kGraph6MaxOrder);
  if (!g.name().empty() && !h.name().empty()) out.graph = out.graph.renamed(g.name() + " o " + h.name());
  return out;
}

VertexSubset relabel_product_subset(const ProductIndexMap& map,
                                    const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Mask m = 0;
  for (auto [g, h] : pairs) m |= bit(map.encode(g, h));
  return {map.order(), m};
}

Mask product_block(const ProductIndexMap& map, Mask g_part, Mask h_part) {
  Mask out = 0;
  for_each_bit(g_part, [&](Vertex a) { out |= h_part << (a * map.h_order()); });
  return out;
}

}  // namespace wfc
