#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "domsetkit/decomp.hpp"
#include "domsetkit/errors.hpp"
#include "domsetkit/fes.hpp"
#include "domsetkit/generators.hpp"
#include "domsetkit/graph.hpp"
#include "domsetkit/oracle.hpp"
#include "support/builders.hpp"

namespace {

using namespace domsetkit;
using namespace domsetkit::testing;

Graph bowtie() {
  return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph minus(const Graph& g, const VertexSet& drop) {
  VertexSet keep = VertexSet::full(g.n());
  drop.for_each([&](int v) { keep.reset(v); });
  return induced_subgraph(g, keep).graph;
}

// Every simple cycle as a vertex set: paths grow from their smallest vertex,
// each cycle kept in one orientation only.
std::vector<VertexSet> simple_cycles(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<int> path;
  std::vector<char> used(g.n(), 0);
  std::function<void(int)> grow = [&](int v) {
    for (int u : g.neighbors(v)) {
      if (u == path[0] && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(VertexSet::from_vector(g.n(), path));
      } else if (u > path[0] && !used[u]) {
        used[u] = 1;
        path.push_back(u);
        grow(u);
        path.pop_back();
        used[u] = 0;
      }
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    used[s] = 1;
    grow(s);
    used[s] = 0;
  }
  return out;
}

bool cycles_pairwise_almost_disjoint(const Graph& g) {
  std::vector<VertexSet> cycles = simple_cycles(g);
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      int common = 0;
      cycles[i].for_each([&](int v) { common += cycles[j].test(v); });
      if (common >= 2) return false;
    }
  return true;
}

void check_modulator_contract(const Graph& g) {
  FesModulatorResult r = fes_modulator(g);
  CAPTURE(g.n());
  CAPTURE(g.m());

  REQUIRE(static_cast<int>(r.f.size()) == feedback_edge_number(g));
  CHECK(r.m.count() <= static_cast<int>(r.f.size()) / 2);
  CHECK(is_cactus(minus(g, r.m)));
  CHECK(feedback_edge_number(minus(g, r.m)) <=
        static_cast<int>(r.f.size()) - 2 * r.m.count());

  REQUIRE(static_cast<int>(r.removal_order.size()) == r.m.count());
  REQUIRE(r.deactivated.size() == r.removal_order.size());
  std::set<int> assigned;
  for (const auto& batch : r.deactivated) {
    CHECK(batch.size() >= 2);
    for (int idx : batch) {
      REQUIRE(idx >= 0);
      REQUIRE(idx < static_cast<int>(r.f.size()));
      CHECK(!assigned.count(idx));
      assigned.insert(idx);
    }
  }
  for (auto [top, bot] : r.f) {
    CHECK(g.has_edge(top, bot));
    CHECK(r.parent[top] != bot);
    CHECK(r.parent[bot] != top);
  }
}

}  // namespace

TEST_CASE("feedback modulator: forests come back untouched") {
  for (const Graph& g : {path(6), star(4), Graph(1), Graph(0),
                         make_graph(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}})}) {
    FesModulatorResult r = fes_modulator(g);
    CHECK(r.f.empty());
    CHECK(r.m.count() == 0);
    CHECK(r.removal_order.empty());
    CHECK(r.deactivated.empty());
  }
  FesModulatorResult r = fes_modulator(path(4));
  CHECK(r.parent == std::vector<int>({-1, 0, 1, 2}));
}

TEST_CASE("feedback modulator: worked examples") {
  SUBCASE("single cycle") {
    FesModulatorResult r = fes_modulator(cycle(5));
    CHECK(r.m.count() == 0);
    REQUIRE(r.f.size() == 1);
    CHECK(r.f[0] == std::pair<int, int>(0, 4));
  }
  SUBCASE("bowtie is close enough to a cactus already") {
    FesModulatorResult r = fes_modulator(bowtie());
    CHECK(r.f.size() == 2);
    CHECK(r.m.count() <= 1);
    CHECK(is_cactus(minus(bowtie(), r.m)));
  }
  SUBCASE("complete graph on four vertices") {
    Graph g = complete(4);
    FesModulatorResult r = fes_modulator(g);
    CHECK(r.f.size() == 3);
    REQUIRE(r.m.count() == 1);
    Graph rest = minus(g, r.m);
    CHECK(rest.n() == 3);
    CHECK(rest.m() == 3);
    CHECK(is_cactus(rest));
    REQUIRE(r.deactivated.size() == 1);
    CHECK(r.deactivated[0].size() == 2);
  }
  SUBCASE("two disjoint triangles") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    FesModulatorResult r = fes_modulator(g);
    CHECK(r.m.count() == 0);
    CHECK(r.f.size() == 2);
  }
}

TEST_CASE("feedback modulator: tracked spans are descended before sibling subtrees") {
  // Two vertex-disjoint cycles hang off the tree; the tracked edge at vertex 1
  // spans the higher-id branch, so the scan must finish it before entering the
  // lower-id branch that holds the second cycle. Either cycle alone is fine,
  // so nothing needs deleting.
  Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {1, 6}, {2, 4}});
  FesModulatorResult r = fes_modulator(g);
  CHECK(r.f.size() == 2);
  CHECK(r.m.count() == 0);

  // A vertex that closes one tracked edge and opens the next.
  Graph chained = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {2, 4}});
  FesModulatorResult c = fes_modulator(chained);
  CHECK(c.f.size() == 2);
  CHECK(c.m.count() == 0);
}

TEST_CASE("cactus recognition: worked examples") {
  CHECK(is_cactus(Graph(0)));
  CHECK(is_cactus(Graph(3)));
  CHECK(is_cactus(path(7)));
  CHECK(is_cactus(star(5)));
  CHECK(is_cactus(cycle(5)));
  CHECK(is_cactus(bowtie()));
  CHECK(is_cactus(make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));

  CHECK(!is_cactus(complete(4)));
  // two triangles glued along an edge
  CHECK(!is_cactus(make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {0, 3}})));
  // theta: three internally disjoint 0-1 paths
  CHECK(!is_cactus(make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}})));
  // chord turns one cycle into two sharing an edge
  Graph chorded = cycle(6);
  chorded.add_edge(0, 2);
  CHECK(!is_cactus(chorded));

  for (int n : {5, 10, 20, 40})
    for (uint64_t seed : {11u, 22u, 33u}) CHECK(is_cactus(gen_cactus(n, seed)));
}

TEST_CASE("cactus recognition matches pairwise cycle intersections") {
  std::mt19937_64 rng(660913);
  int done = 0;
  while (done < 150) {
    int n = 3 + static_cast<int>(rng() % 7);
    double p = (1.0 + rng() % 25 / 10.0) * 2.0 / n;
    Graph g = gen_random(n, std::min(p, 0.9), rng());
    if (g.m() > 13) continue;
    ++done;
    CAPTURE(n);
    CHECK(is_cactus(g) == cycles_pairwise_almost_disjoint(g));
  }
}

TEST_CASE("feedback modulator invariants across random graphs") {
  std::mt19937_64 rng(20240817);
  int done = 0;
  while (done < 500) {
    int n = 1 + static_cast<int>(rng() % 40);
    int target = static_cast<int>(rng() % 56);
    double p = n >= 2 ? std::min(1.0, 2.0 * target / (static_cast<double>(n) * (n - 1))) : 0.0;
    Graph g = gen_random(n, p, rng());
    if (g.m() > 60) continue;
    ++done;
    check_modulator_contract(g);
  }
}

TEST_CASE("feedback modulator solve: worked examples") {
  WeightFn unit = WeightFn::unit();

  SolveResult c6 = solve_exact_fes(cycle(6), unit);
  CHECK(c6.weight == 2);
  CHECK(c6.weight == brute_min_dominating(cycle(6)).weight);

  SolveResult k4 = solve_exact_fes(complete(4), unit);
  CHECK(k4.weight == 1);

  Graph triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  SolveResult two = solve_exact_fes(triangles, unit);
  CHECK(two.weight == 2);
  CHECK(is_dominating(triangles, two.solution, VertexSet::full(6)));

  // zero weight on the deleted vertex keeps it usable in solutions
  WeightFn wk{{0, 9, 9, 9}};
  SolveResult k4w = solve_exact_fes(complete(4), wk);
  CHECK(k4w.weight == 0);
  CHECK(k4w.solution == VertexSet::of(4, {0}));
}

TEST_CASE("feedback modulator solve matches brute force") {
  std::mt19937_64 rng(775031);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    double p = (1.0 + rng() % 30 / 10.0) / std::max(1, n - 1);
    Graph g = gen_random(n, std::min(p, 1.0), rng());
    WeightFn w = trial % 2 ? gen_weights(n, 0, 6, rng()) : WeightFn::unit();
    SolveResult got = solve_exact_fes(g, w);
    OracleResult want = brute_min_dominating(g, w);
    CAPTURE(n);
    CAPTURE(g.m());
    REQUIRE(got.weight == want.weight);
    CHECK(is_dominating(g, got.solution, VertexSet::full(n)));
    CHECK(w.total(got.solution) == got.weight);
  }
}

TEST_CASE("feedback modulator solve agrees with the direct width-2 pipeline on cacti") {
  std::mt19937_64 rng(43210);
  for (int n : {10, 18, 26, 34}) {
    for (int rep = 0; rep < 3; ++rep) {
      Graph g = gen_cactus(n, rng());
      WeightFn w = gen_weights(n, 0, 5, rng());
      SolveResult via_fes = solve_exact_fes(g, w);
      SolveResult direct = solve_exact_tw(g, w, decompose_bounded(g, 2));
      CHECK(via_fes.weight == direct.weight);
    }
  }
}

TEST_CASE("feedback modulator solve rejects oversized modulators") {
  Graph g(26 * 4);
  for (int b = 0; b < 26; ++b)
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) g.add_edge(4 * b + u, 4 * b + v);
  CHECK_THROWS_AS(solve_exact_fes(g, WeightFn::unit()), ResourceError);
}
