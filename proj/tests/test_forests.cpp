#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "wfc/error.hpp"
#include "wfc/families.hpp"
#include "wfc/forests.hpp"
#include "wfc/independence.hpp"
#include "wfc/product.hpp"

using namespace wfc;

namespace {

Graph fam(const char* spec) { return generate(parse_family(spec)); }

std::set<Mask> mask_set(const std::vector<VertexSubset>& v) {
  std::set<Mask> out;
  for (const auto& s : v) out.insert(s.mask());
  return out;
}

VertexSubset fig(std::initializer_list<Vertex> vs) { return VertexSubset::of(5, vs); }

}  // namespace

TEST_CASE("is_induced_forest") {
  const Graph c4 = fam("cycle:4");
  for (Vertex skip = 0; skip < 4; ++skip) CHECK(is_induced_forest(c4, VertexSubset(4, 0b1111 & ~bit(skip))));
  CHECK_FALSE(is_induced_forest(c4, VertexSubset::all(4)));
  CHECK(is_induced_forest(c4, VertexSubset(4, 0)));

  const LexProduct p = lexicographic(fam("cycle:5"), fam("cycle:4"));
  auto xy = [](int x, int y) { return std::pair<Vertex, Vertex>{x - 1, y - 1}; };
  CHECK(is_induced_forest(p.graph, relabel_product_subset(p.map, {xy(1, 1), xy(1, 3), xy(2, 1), xy(3, 1), xy(4, 1), xy(4, 3)})));
}

TEST_CASE("is_maximal_induced_forest") {
  using namespace fig1;
  const Graph g = fam("fig1");
  CHECK(is_maximal_induced_forest(fam("path:4"), VertexSubset::all(4)));
  CHECK_FALSE(is_maximal_induced_forest(g, fig({a, b, c})));  // e extends it to the path e-a-b-c
  CHECK(is_induced_forest(g, fig({e, a, b, c})));
  CHECK(is_maximal_induced_forest(g, fig({e, a, b, c})));
  CHECK(is_maximal_induced_forest(g, fig({a, b, d})));
  CHECK_FALSE(is_maximal_induced_forest(g, VertexSubset(5, 0)));
}

TEST_CASE("enumerate_maximal_induced_forests: worked cases") {
  using namespace fig1;
  const auto p4 = enumerate_maximal_induced_forests(fam("path:4"));
  REQUIRE(p4.size() == 1);
  CHECK(p4[0] == VertexSubset::all(4));

  const auto c4 = enumerate_maximal_induced_forests(fam("cycle:4"));
  CHECK(c4.size() == 4);
  for (const auto& s : c4) CHECK(s.size() == 3);

  const auto f1 = mask_set(enumerate_maximal_induced_forests(fam("fig1")));
  CHECK(f1.count(fig({a, b, d}).mask()) == 1);
  CHECK(f1.count(fig({e, a, b, c}).mask()) == 1);
  CHECK(f1 == oracle::maximal_forests(fam("fig1")));
}

TEST_CASE("enumeration output is ascending and bounded") {
  const auto sets = enumerate_maximal_induced_forests(lexicographic(Graph::empty(3), fam("cycle:4")).graph);
  CHECK(sets.size() == 64);
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1].mask() < sets[i].mask());

  const Graph big = fam("cycle:25");
  CHECK_THROWS_AS(enumerate_maximal_induced_forests(big), ResourceError);
  try {
    (void)forest_number(fam("cycle:12"), {.max_order = 10});
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.bound() == 10);
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
  // Requests above the hard limit are clamped to it.
  CHECK_THROWS_AS(forest_number(big, {.max_order = 40}), ResourceError);
}

TEST_CASE("forest_number: worked cases") {
  CHECK(forest_number(fam("cycle:4")) == 3);
  CHECK(forest_number(lexicographic(fam("cycle:5"), fam("cycle:4")).graph) == 6);
  CHECK(forest_number(lexicographic(fam("path:4"), Graph::empty(2)).graph) == 6);
  for (int n = 3; n <= 9; ++n) CHECK(forest_number(fam(("cycle:" + std::to_string(n)).c_str())) == n - 1);
  for (int n = 1; n <= 9; ++n) CHECK(forest_number(fam(("path:" + std::to_string(n)).c_str())) == n);
  for (int n = 2; n <= 9; ++n) CHECK(forest_number(fam(("complete:" + std::to_string(n)).c_str())) == 2);
  CHECK(forest_number(Graph::empty(1)) == 1);
}

TEST_CASE("is_well_f_covered: worked cases") {
  CHECK(is_well_f_covered(fam("cycle:4")).uniform);
  CHECK_FALSE(is_well_f_covered(fam("cycle:4")).witness.has_value());

  const auto p = is_well_f_covered(lexicographic(fam("path:4"), Graph::empty(2)).graph);
  CHECK_FALSE(p.uniform);
  REQUIRE(p.witness);
  CHECK(p.witness->first.size() == 5);
  CHECK(p.witness->second.size() == 6);

  const Graph c5c4 = lexicographic(fam("cycle:5"), fam("cycle:4")).graph;
  const auto q = is_well_f_covered(c5c4);
  CHECK_FALSE(q.uniform);
  REQUIRE(q.witness);
  CHECK(q.witness->first.size() == 5);
  CHECK(q.witness->second.size() == 6);
  CHECK(is_maximal_induced_forest(c5c4, q.witness->first));
  CHECK(is_maximal_induced_forest(c5c4, q.witness->second));

  CHECK_FALSE(is_well_f_covered(oracle::bowtie()).uniform);
  CHECK(size_histogram(enumerate_maximal_induced_forests(oracle::bowtie())) == std::map<int, int>{{3, 4}, {4, 1}});
}

TEST_CASE("forest_stats") {
  using namespace fig1;
  CHECK(forest_stats(fam("path:3"), VertexSubset::all(3)) == ForestStats{0, 0, 2, 1});
  CHECK(forest_stats(fam("complete:2"), VertexSubset::all(2)) == ForestStats{0, 1, 0, 0});
  CHECK(forest_stats(fam("fig1"), fig({e, a, b, c})) == ForestStats{0, 0, 2, 2});
  CHECK(forest_stats(Graph::empty(3), VertexSubset::all(3)) == ForestStats{3, 0, 0, 0});
  CHECK_THROWS_AS(forest_stats(fam("cycle:4"), VertexSubset::all(4)), DomainError);
}

TEST_CASE("forest_partition") {
  const auto k2 = forest_partition(fam("complete:2"), VertexSubset::all(2));
  CHECK(k2.z.members() == std::vector<Vertex>{0});
  CHECK(k2.t.members() == std::vector<Vertex>{1});
  CHECK(k2.x.empty());
  CHECK(k2.y.empty());
  const auto k2max = forest_partition(fam("complete:2"), VertexSubset::all(2), ZChoice::max_index);
  CHECK(k2max.z.members() == std::vector<Vertex>{1});
  CHECK(k2max.t.members() == std::vector<Vertex>{0});

  const auto p3 = forest_partition(fam("path:3"), VertexSubset::all(3));
  CHECK(p3.x.members() == std::vector<Vertex>{0, 2});
  CHECK(p3.x1.empty());
  CHECK(p3.x2 == p3.x);
  CHECK(p3.y.members() == std::vector<Vertex>{1});
  CHECK(p3.z.empty());
  CHECK(p3.t.empty());

  const Graph k1k2 = disjoint_union(Graph::empty(1), fam("complete:2"));
  const auto mixed = forest_partition(k1k2, VertexSubset::all(3));
  CHECK(mixed.x1.members() == std::vector<Vertex>{0});
  CHECK(mixed.z.members() == std::vector<Vertex>{1});
  CHECK(mixed.t.members() == std::vector<Vertex>{2});

  CHECK_THROWS_AS(forest_partition(fam("fig1"), fig({fig1::a, fig1::b, fig1::c})), DomainError);
}

TEST_CASE("properties over all graphs to 6 vertices") {
  for (const Graph& g : oracle::all_unlabeled_up_to(6)) {
    const auto forests = enumerate_maximal_induced_forests(g);
    REQUIRE_FALSE(forests.empty());
    const int f = forest_number(g);
    int largest = 0;
    for (const auto& s : forests) {
      const ForestStats st = forest_stats(g, s);
      REQUIRE(st.order() == s.size());
      largest = std::max(largest, s.size());
      if (!g.is_edgeless()) REQUIRE(induced_subgraph(g, s).edge_count() > 0);
      for (ZChoice z : {ZChoice::min_index, ZChoice::max_index}) {
        const ForestPartition part = forest_partition(g, s, z);
        REQUIRE((part.x.mask() | part.y.mask() | part.z.mask() | part.t.mask()) == s.mask());
        REQUIRE(part.x.size() + part.y.size() + part.z.size() + part.t.size() == s.size());
        REQUIRE((part.x1.mask() | part.x2.mask()) == part.x.mask());
        REQUIRE((part.x1.mask() & part.x2.mask()) == 0);
        REQUIRE(part.z.size() == st.k2_components);
        REQUIRE(part.t.size() == st.k2_components);
        for (Vertex zv : part.z.members()) REQUIRE(popcount(g.neighbors(zv) & s.mask() & part.t.mask()) == 1);
        for (Vertex tv : part.t.members()) REQUIRE(popcount(g.neighbors(tv) & s.mask() & part.z.mask()) == 1);
      }
    }
    REQUIRE(largest == f);
    REQUIRE(independence_number(g) <= f);
    REQUIRE(f <= g.order());
    REQUIRE(f == oracle::forest_number(g));
  }
}

TEST_CASE("disjoint unions: forest number adds, well-f-coveredness factors") {
  const auto graphs = oracle::all_unlabeled_up_to(4);
  for (const Graph& g1 : graphs) {
    const bool w1 = is_well_f_covered(g1).uniform;
    for (const Graph& g2 : graphs) {
      const Graph u = disjoint_union(g1, g2);
      REQUIRE(forest_number(u) == forest_number(g1) + forest_number(g2));
      REQUIRE(is_well_f_covered(u).uniform == (w1 && is_well_f_covered(g2).uniform));
      // The component-wise route must match the independent full scan.
      REQUIRE(mask_set(enumerate_maximal_induced_forests(u)) == oracle::maximal_forests(u));
    }
  }
}
