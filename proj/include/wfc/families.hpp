#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wfc/graph.hpp"

namespace wfc {

enum class FamilyKind { path, cycle, complete, empty, fig1 };

/// A named graph family member, written `path:4`, `cycle:5`, `complete:4`,
/// `empty:3` or `fig1` on the command line.
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int k = 1;  // ignored for fig1

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws ParameterError on unknown kinds, missing/garbled sizes and out-of-range k.
FamilySpec parse_family(std::string_view text);
// Same, but returns nullopt instead of throwing when the text is not family syntax at all.
std::optional<FamilySpec> try_parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Path and cycle vertices are numbered in walk order.  The five-vertex
// fig1 graph is a triangle a,d,e with the path a-b-c-d closing a 4-cycle
// a,b,c,d; vertices a..e map to 0..4.
Graph generate(const FamilySpec& spec);

namespace fig1 {
inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4;
}

}  // namespace wfc
