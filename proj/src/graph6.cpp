#include "wfc/graph6.hpp"

#include <vector>

#include "wfc/error.hpp"

namespace wfc {
namespace {

constexpr int kBias = 63;
constexpr int kLongMarker = 126;

std::size_t packed_bytes(int order) {
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 record", 0);
  auto byte_at = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kLongMarker) throw ParseError("byte outside graph6 range 63..126", i);
    return c - kBias;
  };

  std::size_t pos = 0;
  long order = byte_at(0);
  ++pos;
  if (order == kLongMarker - kBias) {
    // Long form: three (or, after a second 126, six) 6-bit groups.
    std::size_t groups = 3;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kLongMarker) {
      groups = 6;
      ++pos;
    }
    if (text.size() < pos + groups) throw ParseError("truncated graph6 order field", text.size());
    order = 0;
    for (std::size_t i = 0; i < groups; ++i) order = (order << 6) | byte_at(pos + i);
    pos += groups;
    throw UnsupportedSize("graph6 order " + std::to_string(order) + " needs the long form; only orders <= " +
                          std::to_string(kGraph6MaxOrder) + " are supported");
  }
  if (order == 0) throw ParseError("graph6 order 0 is not a graph", 0);

  const int n = static_cast<int>(order);
  const std::size_t need = packed_bytes(n);
  if (text.size() < pos + need) throw ParseError("truncated graph6 adjacency data", text.size());
  if (text.size() > pos + need) throw ParseError("trailing bytes after graph6 record", pos + need);

  std::vector<Mask> rows(n, 0);
  int k = 0;  // bit index into the upper triangle, column-major
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = byte_at(pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + k / 6;
    const int padding = byte_at(last) & ((1 << (6 - k % 6)) - 1);
    if (padding != 0) throw ParseError("nonzero padding bits in graph6 record", last);
  }
  // Validate every data byte even when it carries only padding.
  for (std::size_t i = pos; i < text.size(); ++i) byte_at(i);
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw UnsupportedSize("graph6 short form holds at most " + std::to_string(kGraph6MaxOrder) +
                          " vertices, graph has " + std::to_string(n));
  std::string out;
  out.reserve(1 + packed_bytes(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace wfc
