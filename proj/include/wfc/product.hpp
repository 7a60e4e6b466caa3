#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfc/graph.hpp"

namespace wfc {

/// Row-major numbering of product vertices: (g, h) <-> g * h_order + h.
class ProductIndexMap {
 public:
  ProductIndexMap() = default;
  ProductIndexMap(int g_order, int h_order) : g_order_(g_order), h_order_(h_order) {}

  int g_order() const noexcept { return g_order_; }
  int h_order() const noexcept { return h_order_; }
  int order() const noexcept { return g_order_ * h_order_; }

  Vertex encode(Vertex g, Vertex h) const;
  std::pair<Vertex, Vertex> decode(Vertex index) const;

  friend bool operator==(const ProductIndexMap&, const ProductIndexMap&) = default;

 private:
  int g_order_ = 0;
  int h_order_ = 0;
};

struct LexProduct {
  Graph graph;
  ProductIndexMap map;
  // Set when the product cannot be written as short-form graph6.
  std::optional<std::string> size_warning;
};

// G o H: (g1,h1) ~ (g2,h2) iff g1 ~ g2 in G, or g1 == g2 and h1 ~ h2 in H.
LexProduct lexicographic(const Graph& g, const Graph& h);

VertexSubset relabel_product_subset(const ProductIndexMap& map,
                                    const std::vector<std::pair<Vertex, Vertex>>& pairs);

// A x B as encoded product vertices.
Mask product_block(const ProductIndexMap& map, Mask g_part, Mask h_part);

}  // namespace wfc
