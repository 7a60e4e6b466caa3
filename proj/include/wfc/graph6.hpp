#pragma once

#include <string>
#include <string_view>

#include "wfc/graph.hpp"

namespace wfc {

// graph6, short form only (order <= 62), no ">>graph6<<" header.
inline constexpr int kGraph6MaxOrder = 62;

// Throws ParseError (with byte offset) on malformed input and UnsupportedSize
// for long-form orders this library cannot hold.
Graph from_graph6(std::string_view text);
// Throws UnsupportedSize when g.order() > 62.
std::string to_graph6(const Graph& g);

}  // namespace wfc
