#pragma once

// Exhaustive subset-scan kernels over 64-bit vertex masks.
//
// Every scan exists twice: a plain serial loop kept as the reference, and an
// OpenMP version that splits the subset space into contiguous blocks.  Both
// return masks in ascending numeric order, so their outputs are identical for
// any thread count.

#include <omp.h>

#include <array>
#include <span>
#include <vector>

#include "wfc/graph.hpp"

namespace wfc::kernels {

using Rows = std::span<const Mask>;

// Components of G[s], written into comps; returns their count.
inline int split_components(Rows rows, Mask s, std::array<Mask, 64>& comps) {
  int count = 0;
  Mask remaining = s;
  while (remaining) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex w) { next |= rows[w]; });
      next &= s & ~comp;
      comp |= next;
      frontier = next;
    }
    comps[count++] = comp;
    remaining &= ~comp;
  }
  return count;
}

inline int induced_edge_count(Rows rows, Mask s) {
  int twice = 0;
  for_each_bit(s, [&](Vertex v) { twice += popcount(rows[v] & s); });
  return twice / 2;
}

inline bool induces_forest(Rows rows, Mask s) {
  const int edges = induced_edge_count(rows, s);
  const int size = popcount(s);
  if (edges >= size && size > 0) return false;
  std::array<Mask, 64> comps;
  return edges == size - split_components(rows, s, comps);
}

// True iff s induces a forest and every vertex of all \ s closes a cycle with it.
inline bool induces_maximal_forest(Rows rows, Mask s, Mask all) {
  const Mask outside = all & ~s;
  // A vertex with fewer than two neighbours in s can always be added.
  for (Mask m = outside; m; m &= m - 1)
    if (popcount(rows[lowest(m)] & s) < 2) return false;
  const int edges = induced_edge_count(rows, s);
  const int size = popcount(s);
  if (size == 0 || edges >= size) return false;
  std::array<Mask, 64> comps;
  const int count = split_components(rows, s, comps);
  if (edges != size - count) return false;
  for (Mask m = outside; m; m &= m - 1) {
    const Mask nbrs = rows[lowest(m)] & s;
    bool closes = false;
    for (int c = 0; c < count && !closes; ++c) closes = popcount(nbrs & comps[c]) >= 2;
    if (!closes) return false;
  }
  return true;
}

inline bool is_independent(Rows rows, Mask s) {
  for (Mask m = s; m; m &= m - 1)
    if (rows[lowest(m)] & s) return false;
  return true;
}

inline bool is_maximal_independent(Rows rows, Mask s, Mask all) {
  if (!is_independent(rows, s)) return false;
  for (Mask m = all & ~s; m; m &= m - 1)
    if (!(rows[lowest(m)] & s)) return false;
  return true;
}

/// Serial reference: every mask in [0, 2^n) accepted by pred, ascending.
template <class Pred>
std::vector<Mask> filter_subsets_serial(int n, Pred&& pred) {
  std::vector<Mask> out;
  const Mask end = Mask{1} << n;
  for (Mask s = 0; s < end; ++s)
    if (pred(s)) out.push_back(s);
  return out;
}

/// OpenMP scan over blocks of consecutive masks; block results are concatenated
/// in block order.  threads <= 0 uses the OpenMP default.
template <class Pred>
std::vector<Mask> filter_subsets_parallel(int n, Pred&& pred, int threads = 0) {
  const int block_bits = n < 10 ? n : 10;
  const long blocks = 1L << block_bits;
  const int shift = n - block_bits;
  std::vector<std::vector<Mask>> found(static_cast<std::size_t>(blocks));
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (long b = 0; b < blocks; ++b) {
    const Mask begin = static_cast<Mask>(b) << shift;
    const Mask end = static_cast<Mask>(b + 1) << shift;
    auto& local = found[static_cast<std::size_t>(b)];
    for (Mask s = begin; s < end; ++s)
      if (pred(s)) local.push_back(s);
  }
  std::size_t total = 0;
  for (const auto& v : found) total += v.size();
  std::vector<Mask> out;
  out.reserve(total);
  for (const auto& v : found) out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline std::vector<Mask> maximal_forests_serial(const Graph& g) {
  const Rows rows = g.rows();
  const Mask all = g.vertex_mask();
  return filter_subsets_serial(g.order(), [&](Mask s) { return induces_maximal_forest(rows, s, all); });
}

inline std::vector<Mask> maximal_forests_parallel(const Graph& g, int threads = 0) {
  const Rows rows = g.rows();
  const Mask all = g.vertex_mask();
  return filter_subsets_parallel(
      g.order(), [&](Mask s) { return induces_maximal_forest(rows, s, all); }, threads);
}

inline std::vector<Mask> maximal_independent_serial(const Graph& g) {
  const Rows rows = g.rows();
  const Mask all = g.vertex_mask();
  return filter_subsets_serial(g.order(), [&](Mask s) { return is_maximal_independent(rows, s, all); });
}

inline std::vector<Mask> maximal_independent_parallel(const Graph& g, int threads = 0) {
  const Rows rows = g.rows();
  const Mask all = g.vertex_mask();
  return filter_subsets_parallel(
      g.order(), [&](Mask s) { return is_maximal_independent(rows, s, all); }, threads);
}

// Largest k such that some k-subset induces a forest.  Scans sizes from n
// downwards (Gosper's hack within each size) and stops at the first hit.
inline int max_forest_order_descending(const Graph& g) {
  const Rows rows = g.rows();
  const int n = g.order();
  for (int k = n; k > 0; --k) {
    Mask s = low_bits(k);
    const Mask limit = Mask{1} << n;
    while (s < limit) {
      if (induces_forest(rows, s)) return k;
      const Mask c = s & (~s + 1);
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return 0;
}

}  // namespace wfc::kernels
