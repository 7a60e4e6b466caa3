#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wfc/graph.hpp"

namespace wfc {

// Exhaustive scans refuse graphs above this order.
inline constexpr int kDefaultEnumerationBound = 24;
inline constexpr int kMaxEnumerationBound = 24;

struct EnumerationOptions {
  int max_order = kDefaultEnumerationBound;  // clamped to kMaxEnumerationBound
  int threads = 0;                           // 0: OpenMP default
};

// Throws ResourceError when g is above the effective bound.
void require_enumerable(const Graph& g, const EnumerationOptions& opts);

bool is_induced_forest(const Graph& g, const VertexSubset& s);
bool is_maximal_induced_forest(const Graph& g, const VertexSubset& s);

// All maximal induced forests, each once, ascending by bitset value.
// Disconnected graphs are enumerated component by component and recombined.
std::vector<VertexSubset> enumerate_maximal_induced_forests(const Graph& g, const EnumerationOptions& opts = {});

// Order of a largest induced forest, via a size-descending subset scan.
int forest_number(const Graph& g, const EnumerationOptions& opts = {});

/// Outcome of "do all maximal sets have the same size".  When they do not,
/// witness holds the first smallest and the first largest set found.
struct Uniformity {
  bool uniform = true;
  std::optional<std::pair<VertexSubset, VertexSubset>> witness;
};

Uniformity uniformity_of(const std::vector<VertexSubset>& sets);
Uniformity is_well_f_covered(const Graph& g, const EnumerationOptions& opts = {});

// size -> number of sets with that size
std::map<int, int> size_histogram(const std::vector<VertexSubset>& sets);

/// Component counters of an induced forest F.
struct ForestStats {
  int isolated = 0;       // I(F): isolated vertices
  int k2_components = 0;  // K2(F): components that are a single edge
  int outer_leaves = 0;   // L(F): leaves of components other than K2
  int internal = 0;       // L'(F): vertices of degree >= 2

  int order() const noexcept { return isolated + 2 * k2_components + outer_leaves + internal; }
  friend bool operator==(const ForestStats&, const ForestStats&) = default;
};

// Throws DomainError if f does not induce a forest.
ForestStats forest_stats(const Graph& g, const VertexSubset& f);

// Which endpoint of a K2 component becomes its Z representative.
enum class ZChoice { min_index, max_index };

/// Partition of a maximal forest used by the product witness constructions.
///   x  = isolated vertices and leaves of non-K2 components  (x1 isolated, x2 leaves)
///   y  = vertices of degree >= 2
///   z  = one chosen endpoint of every K2 component, t = the other endpoint
struct ForestPartition {
  VertexSubset x, x1, x2, y, z, t;
};

// Throws DomainError unless f is a maximal induced forest of g.
ForestPartition forest_partition(const Graph& g, const VertexSubset& f, ZChoice choice = ZChoice::min_index);

}  // namespace wfc
