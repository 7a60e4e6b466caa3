#include "wfc/families.hpp"

#include <charconv>
#include <vector>

#include "wfc/error.hpp"

namespace wfc {
namespace {

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::empty: return "empty";
    case FamilyKind::fig1: return "fig1";
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  const int minimum = spec.kind == FamilyKind::cycle ? 3 : 1;
  if (spec.kind == FamilyKind::fig1) return;
  if (spec.k < minimum)
    throw ParameterError(std::string(kind_name(spec.kind)) + " size must be at least " +
                         std::to_string(minimum) + ", got " + std::to_string(spec.k));
  if (spec.k > Graph::kMaxOrder)
    throw ParameterError(std::string(kind_name(spec.kind)) + " size " + std::to_string(spec.k) +
                         " exceeds " + std::to_string(Graph::kMaxOrder));
}

}  // namespace

std::optional<FamilySpec> try_parse_family(std::string_view text) {
  if (text == "fig1") return FamilySpec{FamilyKind::fig1, 0};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view head = text.substr(0, colon);
  FamilySpec spec;
  if (head == "path") spec.kind = FamilyKind::path;
  else if (head == "cycle") spec.kind = FamilyKind::cycle;
  else if (head == "complete") spec.kind = FamilyKind::complete;
  else if (head == "empty") spec.kind = FamilyKind::empty;
  else return std::nullopt;
  const std::string_view tail = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), spec.k);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || tail.empty())
    throw ParameterError("bad size in family spec '" + std::string(text) + "'");
  validate(spec);
  return spec;
}

FamilySpec parse_family(std::string_view text) {
  if (auto spec = try_parse_family(text)) return *spec;
  throw ParameterError("unknown family spec '" + std::string(text) +
                       "' (expected path:k, cycle:k, complete:k, empty:k or fig1)");
}

std::string to_string(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::fig1) return "fig1";
  return std::string(kind_name(spec.kind)) + ":" + std::to_string(spec.k);
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<std::pair<Vertex, Vertex>> edges;
  int order = spec.k;
  switch (spec.kind) {
    case FamilyKind::path:
      for (Vertex v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::cycle:
      for (Vertex v = 0; v < order; ++v) edges.emplace_back(v, (v + 1) % order);
      break;
    case FamilyKind::complete:
      for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::empty:
      break;
    case FamilyKind::fig1: {
      using namespace fig1;
      order = 5;
      edges = {{e, a}, {a, d}, {e, d}, {d, c}, {a, b}, {b, c}};
      break;
    }
  }
  return Graph::from_edges(order, edges, to_string(spec));
}

}  // namespace wfc
