#include <sstream>

#include "doctest.h"
#include "domsetkit/decomp.hpp"
#include "domsetkit/errors.hpp"
#include "domsetkit/generators.hpp"
#include "support/builders.hpp"

using namespace domsetkit;
using namespace domsetkit::testing;

namespace {

RawDecomposition path_decomp(int n, int universe) {
  RawDecomposition td;
  td.n = universe;
  for (int i = 0; i + 1 < n; ++i) {
    td.bags.push_back(VertexSet::of(universe, {i, i + 1}));
    if (i) td.tree_edges.emplace_back(i - 1, i);
  }
  return td;
}

}  // namespace

TEST_CASE("verify accepts valid and flags broken decompositions") {
  Graph p5 = path(5);
  RawDecomposition td = path_decomp(5, 5);
  CHECK(verify_decomposition(td, p5).empty());

  SUBCASE("missing edge bag") {
    RawDecomposition bad = td;
    bad.bags[2] = VertexSet::of(5, {2});
    auto issues = verify_decomposition(bad, p5);
    REQUIRE(!issues.empty());
    CHECK(issues[0].axiom == "edge-coverage");
  }
  SUBCASE("disconnected occurrence subtree") {
    RawDecomposition bad = td;
    bad.bags[3].set(0);
    auto issues = verify_decomposition(bad, p5);
    REQUIRE(!issues.empty());
    CHECK(issues[0].axiom == "occurrence-connectivity");
  }
  SUBCASE("uncovered vertex") {
    Graph p6 = path(5);  // same edges, pretend a 6th isolated vertex
    Graph g6(6);
    for (auto [u, v] : p6.edges()) g6.add_edge(u, v);
    RawDecomposition td6 = path_decomp(5, 6);
    auto issues = verify_decomposition(td6, g6);
    REQUIRE(!issues.empty());
    CHECK(issues[0].axiom == "vertex-coverage");
  }
  SUBCASE("cyclic tree") {
    RawDecomposition bad = td;
    bad.tree_edges.emplace_back(0, 3);
    auto issues = verify_decomposition(bad, p5);
    CHECK(!issues.empty());
  }
}

TEST_CASE("make_nice examples") {
  SUBCASE("single bag K3") {
    Graph k3 = complete(3);
    RawDecomposition td;
    td.n = 3;
    td.bags.push_back(VertexSet::full(3));
    NiceTreeDecomposition nice = make_nice(td, k3);
    CHECK(nice.width == 2);
    CHECK(verify_nice(nice, k3).empty());
  }
  SUBCASE("path decomposition of P5") {
    Graph p5 = path(5);
    NiceTreeDecomposition nice = make_nice(path_decomp(5, 5), p5);
    CHECK(nice.width == 1);
    CHECK(verify_nice(nice, p5).empty());
  }
  SUBCASE("invalid input is rejected with the axiom name") {
    Graph p5 = path(5);
    RawDecomposition bad = path_decomp(5, 5);
    bad.bags[3].set(0);
    CHECK_THROWS_WITH_AS(make_nice(bad, p5),
                         "invalid tree decomposition: occurrence-connectivity: bags containing "
                         "vertex 1 are disconnected",
                         ValidationError);
  }
}

TEST_CASE("make_nice preserves width on random decompositions") {
  int checked = 0;
  for (uint64_t seed = 0; checked < 100; ++seed) {
    Graph g = gen_random(6 + static_cast<int>(seed % 9), 0.3, seed + 500);
    RawDecomposition raw = decompose_bounded_raw(g, 3);
    REQUIRE(verify_decomposition(raw, g).empty());
    NiceTreeDecomposition nice = make_nice(raw, g);
    CHECK(nice.width == raw.width());
    CHECK(verify_nice(nice, g).empty());
    // Node-count sanity: linear in n for fixed width.
    CHECK(static_cast<int>(nice.nodes.size()) <= 6 * (nice.width + 2) * (g.n() + 2));
    ++checked;
  }
}

TEST_CASE("decompose_bounded on the stated families") {
  SUBCASE("tree width 1") {
    Graph t(7);
    t.add_edge(0, 1);
    t.add_edge(0, 2);
    t.add_edge(1, 3);
    t.add_edge(1, 4);
    t.add_edge(2, 5);
    t.add_edge(5, 6);
    NiceTreeDecomposition td = decompose_bounded(t, 1);
    CHECK(td.width == 1);
    CHECK(verify_nice(td, t).empty());
  }
  SUBCASE("bowtie width 2") {
    Graph bow = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    NiceTreeDecomposition td = decompose_bounded(bow, 2);
    CHECK(td.width == 2);
    CHECK(verify_nice(td, bow).empty());
  }
  SUBCASE("K4 exceeds d=2") {
    CHECK_THROWS_AS(decompose_bounded(complete(4), 2), WidthExceededError);
    try {
      decompose_bounded(complete(4), 2);
    } catch (const WidthExceededError& e) {
      CHECK(e.bound == 2);
    }
  }
  SUBCASE("edgeless graph at d=0") {
    Graph g(4);
    NiceTreeDecomposition td = decompose_bounded(g, 0);
    CHECK(td.width == 0);
    CHECK(verify_nice(td, g).empty());
    CHECK_THROWS_AS(decompose_bounded(path(3), 0), WidthExceededError);
  }
  SUBCASE("empty graph") {
    Graph g(0);
    NiceTreeDecomposition td = decompose_bounded(g, 2);
    CHECK(verify_nice(td, g).empty());
  }
}

TEST_CASE("cactus graphs decompose at width <= 2") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = gen_cactus(12 + static_cast<int>(seed % 9), seed + 7);
    NiceTreeDecomposition td = decompose_bounded(g, 2);
    CHECK(td.width <= 2);
    CHECK(verify_nice(td, g).empty());
  }
}

TEST_CASE("exact width search matches known treewidths") {
  auto width_of = [](const Graph& g) { return decompose_bounded(g, 3).width; };
  CHECK(width_of(complete(4)) == 3);
  CHECK(width_of(complete(5)) == 4);
  CHECK(width_of(cycle(5)) == 2);
  CHECK(width_of(path(6)) == 1);
  Graph k33(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
  CHECK(width_of(k33) == 3);
  Graph grid(9);  // 3x3 grid has treewidth 3
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) grid.add_edge(3 * r + c, 3 * r + c + 1);
      if (r + 1 < 3) grid.add_edge(3 * r + c, 3 * (r + 1) + c);
    }
  CHECK(width_of(grid) == 3);
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_random(9, 0.4, seed + 900);
    RawDecomposition raw = decompose_bounded_raw(g, 3);
    CHECK(verify_decomposition(raw, g).empty());
  }
}

TEST_CASE("balanced partition bounds") {
  SUBCASE("P4 width 1") {
    Graph p4 = path(4);
    NiceTreeDecomposition td = decompose_bounded(p4, 1);
    BalancedPartition bp = balanced_partition(p4, td);
    CHECK(bp.slack <= 1);
    CHECK(bp.v1.count() + bp.v2.count() == 4);
    CHECK(!bp.v1.intersects(bp.v2));
    int halfcap = (td.width + 1) / 2;
    for (const auto& node : td.nodes) {
      CHECK((node.bag & bp.v1).count() <= halfcap + bp.slack);
      CHECK((node.bag & bp.v2).count() <= halfcap + bp.slack);
    }
  }
  SUBCASE("bowtie width 2") {
    Graph bow = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    NiceTreeDecomposition td = decompose_bounded(bow, 2);
    BalancedPartition bp = balanced_partition(bow, td);
    int halfcap = (td.width + 1) / 2;
    for (const auto& node : td.nodes)
      CHECK(std::max((node.bag & bp.v1).count(), (node.bag & bp.v2).count()) <=
            halfcap + bp.slack);
  }
  SUBCASE("random graphs stay within slack 2") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
      Graph g = gen_random(7 + static_cast<int>(seed % 8), 0.35, seed + 41);
      NiceTreeDecomposition td = decompose_bounded(g, 3);
      BalancedPartition bp = balanced_partition(g, td);
      CHECK(bp.slack <= 2);
      CHECK(bp.v1.count() + bp.v2.count() == g.n());
      int halfcap = (td.width + 1) / 2;
      for (const auto& node : td.nodes)
        CHECK(std::max((node.bag & bp.v1).count(), (node.bag & bp.v2).count()) <=
              halfcap + bp.slack);
    }
  }
}

TEST_CASE("tree decomposition file round trip") {
  Graph g = cycle(5);
  RawDecomposition td = decompose_bounded_raw(g, 2);
  std::ostringstream out;
  write_td(out, td);
  std::istringstream in(out.str());
  RawDecomposition back = read_td(in);
  CHECK(back.n == td.n);
  CHECK(back.width() == td.width());
  REQUIRE(back.bags.size() == td.bags.size());
  for (size_t i = 0; i < td.bags.size(); ++i) CHECK(back.bags[i] == td.bags[i]);
  CHECK(verify_decomposition(back, g).empty());

  SUBCASE("parser rejects malformed input") {
    auto parse = [](const std::string& text) {
      std::istringstream s(text);
      return read_td(s, "t.td");
    };
    CHECK_THROWS_AS(parse("b 1 2\n"), InputError);
    CHECK_THROWS_AS(parse("s td 2 1 3\nb 1 1\nb 1 2\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse("s td 2 1 3\nb 1 1\nb 2 2\n"), InputError);
    CHECK_THROWS_AS(parse("s td 1 2 3\nb 1 1\n"), InputError);
    CHECK_THROWS_AS(parse("s td 1 1 3\nb 1 4\n"), InputError);
  }
}
