#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wfc {

using Mask = std::uint64_t;
using Vertex = int;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }
inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }

// Calls fn(v) for every set bit of m, ascending.
template <class Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(lowest(m));
    m &= m - 1;
  }
}

/// A set of vertices of one host graph, stored as a bitset over 0..graph_order-1.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(int graph_order, Mask members);
  static VertexSubset of(int graph_order, const std::vector<Vertex>& members);
  static VertexSubset all(int graph_order) { return {graph_order, low_bits(graph_order)}; }

  int graph_order() const noexcept { return order_; }
  Mask mask() const noexcept { return bits_; }
  int size() const noexcept { return popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order_ && (bits_ & bit(v)); }
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend auto operator<=>(const VertexSubset& a, const VertexSubset& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int order_ = 0;
  Mask bits_ = 0;
};

/// Immutable finite simple undirected graph on vertices 0..order-1.
///
/// Rows are 64-bit adjacency bitsets, so the order is limited to kMaxOrder.
/// Every constructor enforces symmetry and irreflexivity.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  // Builds from an edge list; duplicate edges are merged, loops and
  // out-of-range endpoints throw DomainError.
  static Graph from_edges(int order, const std::vector<std::pair<Vertex, Vertex>>& edges,
                          std::string name = {});
  // Rows must already be symmetric and loop-free.
  static Graph from_rows(std::vector<Mask> rows, std::string name = {});
  static Graph empty(int order);  // order vertices, no edges

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int edge_count() const noexcept { return edges_; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return (rows_[u] >> v) & 1U; }
  Mask neighbors(Vertex v) const noexcept { return rows_[v]; }
  int degree(Vertex v) const noexcept { return popcount(rows_[v]); }
  const std::vector<Mask>& rows() const noexcept { return rows_; }
  Mask vertex_mask() const noexcept { return low_bits(order()); }
  const std::string& name() const noexcept { return name_; }

  // Edges (u,v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  bool is_edgeless() const noexcept { return edges_ == 0; }

  Graph renamed(std::string name) const;

  // Structural equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  Graph(std::vector<Mask> rows, std::string name);

  std::vector<Mask> rows_;
  int edges_ = 0;
  std::string name_;
};

Graph induced_subgraph(const Graph& g, const VertexSubset& s);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Components as vertex masks, ordered by smallest member.
std::vector<Mask> component_masks(const Graph& g, Mask within);
std::vector<VertexSubset> connected_components(const Graph& g);

bool is_acyclic(const Graph& g);

}  // namespace wfc
