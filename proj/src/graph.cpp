#include "wfc/graph.hpp"

#include <string>

#include "wfc/error.hpp"

namespace wfc {

VertexSubset::VertexSubset(int graph_order, Mask members) : order_(graph_order), bits_(members) {
  if (graph_order < 0 || graph_order > Graph::kMaxOrder)
    throw UnsupportedSize("vertex subset host order " + std::to_string(graph_order) +
                          " exceeds " + std::to_string(Graph::kMaxOrder));
  if (members & ~low_bits(graph_order))
    throw DomainError("vertex subset has members outside 0.." + std::to_string(graph_order - 1));
}

VertexSubset VertexSubset::of(int graph_order, const std::vector<Vertex>& members) {
  Mask m = 0;
  for (Vertex v : members) {
    if (v < 0 || v >= graph_order)
      throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(graph_order));
    m |= bit(v);
  }
  return {graph_order, m};
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each_bit(bits_, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(std::vector<Mask> rows, std::string name) : rows_(std::move(rows)), name_(std::move(name)) {
  int twice = 0;
  for (Mask r : rows_) twice += popcount(r);
  edges_ = twice / 2;
}

Graph Graph::from_edges(int order, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name) {
  if (order < 1) throw DomainError("graph order must be at least 1, got " + std::to_string(order));
  if (order > kMaxOrder)
    throw UnsupportedSize("graph order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
  std::vector<Mask> rows(order, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return Graph(std::move(rows), std::move(name));
}

Graph Graph::from_rows(std::vector<Mask> rows, std::string name) {
  const int order = static_cast<int>(rows.size());
  if (order < 1) throw DomainError("graph order must be at least 1");
  if (order > kMaxOrder)
    throw UnsupportedSize("graph order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
  const Mask all = low_bits(order);
  for (Vertex v = 0; v < order; ++v) {
    if (rows[v] & ~all) throw DomainError("row " + std::to_string(v) + " references missing vertices");
    if (rows[v] & bit(v)) throw DomainError("self-loop at vertex " + std::to_string(v));
    for_each_bit(rows[v], [&](Vertex u) {
      if (!(rows[u] & bit(v))) throw DomainError("adjacency rows are not symmetric");
    });
  }
  return Graph(std::move(rows), std::move(name));
}

Graph Graph::empty(int order) { return from_edges(order, {}); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for_each_bit(rows_[u] & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

Graph Graph::renamed(std::string name) const { return Graph(rows_, std::move(name)); }

Graph induced_subgraph(const Graph& g, const VertexSubset& s) {
  if (s.graph_order() != g.order()) throw DomainError("subset belongs to a graph of a different order");
  if (s.empty()) throw DomainError("induced subgraph of the empty vertex set");
  const std::vector<Vertex> keep = s.members();
  std::vector<Mask> rows(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) rows[i] |= bit(static_cast<Vertex>(j));
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  if (n1 + g2.order() > Graph::kMaxOrder)
    throw UnsupportedSize("disjoint union order " + std::to_string(n1 + g2.order()) + " exceeds " +
                          std::to_string(Graph::kMaxOrder));
  std::vector<Mask> rows = g1.rows();
  for (Mask r : g2.rows()) rows.push_back(r << n1);
  return Graph::from_rows(std::move(rows));
}

std::vector<Mask> component_masks(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask remaining = within;
  while (remaining) {
    Mask comp = bit(lowest(remaining));
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex w) { next |= g.neighbors(w); });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::vector<VertexSubset> connected_components(const Graph& g) {
  std::vector<VertexSubset> out;
  for (Mask m : component_masks(g, g.vertex_mask())) out.emplace_back(g.order(), m);
  return out;
}

bool is_acyclic(const Graph& g) {
  const auto comps = component_masks(g, g.vertex_mask());
  return g.edge_count() == g.order() - static_cast<int>(comps.size());
}

}  // namespace wfc
