#include <algorithm>
#include <vector>

#include "doctest.h"
#include "domsetkit/approx_k.hpp"
#include "domsetkit/errors.hpp"
#include "domsetkit/generators.hpp"
#include "domsetkit/graph.hpp"
#include "domsetkit/oracle.hpp"
#include "support/builders.hpp"

namespace {

using namespace domsetkit;
using namespace domsetkit::testing;

double harmonic(int d) {
  double h = 0;
  for (int i = 1; i <= d; ++i) h += 1.0 / i;
  return h;
}

// the apex construction, rebuilt independently of the solver
int max_closed_neighborhood(const Graph& g, const VertexSet& u) {
  const int n = g.n();
  std::vector<int> fwd(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!u.test(v)) fwd[v] = m++;
  Graph gu(m + 1);
  for (auto [a, b] : g.edges())
    if (fwd[a] != -1 && fwd[b] != -1) gu.add_edge(fwd[a], fwd[b]);
  VertexSet fringe(n);
  u.for_each([&](int v) {
    for (int x : g.neighbors(v))
      if (!u.test(x)) fringe.set(x);
  });
  fringe.for_each([&](int v) { gu.add_edge(fwd[v], m); });
  int best = 0;
  for (int v = 0; v <= m; ++v) best = std::max(best, gu.degree(v) + 1);
  return best;
}

}  // namespace

TEST_CASE("budget one finds the star center") {
  TradeoffResult r = approx_tradeoff(star(4), {0, 1, 1, 8});
  CHECK(r.subset_bound == 1);
  CHECK(r.size == 1);
  CHECK(r.solution.test(0));
  CHECK(r.early_exit);
  CHECK(is_dominating(star(4), r.solution, VertexSet::full(5)));
}

TEST_CASE("hexagon with half a budget of four") {
  Graph g = cycle(6);
  TradeoffResult r = approx_tradeoff(g, {1, 2, 4, 8});
  CHECK(r.subset_bound == 3);
  CHECK(is_dominating(g, r.solution, VertexSet::full(6)));
  CHECK(brute_min_dominating(g).weight == 2);
  CHECK(r.size == 2);
  CHECK(r.best_seed.is_subset_of(r.solution));
}

TEST_CASE("over budget still yields a dominating set") {
  Graph g(9);
  for (int t = 0; t < 3; ++t) {
    g.add_edge(3 * t, 3 * t + 1);
    g.add_edge(3 * t, 3 * t + 2);
    g.add_edge(3 * t + 1, 3 * t + 2);
  }
  TradeoffResult r = approx_tradeoff(g, {1, 2, 1, 8});
  CHECK(r.subset_bound == 1);
  CHECK(r.iterations == 10);  // the empty seed plus nine singletons
  CHECK_FALSE(r.early_exit);
  CHECK(is_dominating(g, r.solution, VertexSet::full(9)));
  CHECK(r.size >= 3);
}

TEST_CASE("optimum seeds respect the greedy bound") {
  uint64_t seed = 9100;
  for (int n : {8, 10, 12}) {
    for (double p : {0.2, 0.35, 0.5}) {
      for (int rep = 0; rep < 6; ++rep) {
        Graph g = gen_random(n, p, seed++);
        OracleResult opt = brute_min_dominating(g);
        int k = 2 * static_cast<int>(opt.weight);
        TradeoffConfig cfg{1, 2, k, 16};
        if (cfg.subset_bound() > 16) continue;
        TradeoffResult r = approx_tradeoff(g, cfg);
        CHECK(is_dominating(g, r.solution, VertexSet::full(n)));
        CHECK(r.size >= opt.weight);
        REQUIRE(cfg.subset_bound() >= opt.weight);
        int delta = max_closed_neighborhood(g, *opt.witness);
        CHECK(static_cast<double>(r.size) <=
              static_cast<double>(opt.weight) + harmonic(delta) + 1e-9);
      }
    }
  }
}

TEST_CASE("a wider seed family never loses") {
  uint64_t seed = 9400;
  for (int rep = 0; rep < 12; ++rep) {
    Graph g = gen_random(11, 0.25, seed++);
    int k = 8;
    TradeoffResult zero = approx_tradeoff(g, {0, 1, k, 16});
    TradeoffResult quarter = approx_tradeoff(g, {1, 4, k, 16});
    TradeoffResult half = approx_tradeoff(g, {1, 2, k, 16});
    CHECK(quarter.size <= zero.size);
    CHECK(half.size <= quarter.size);
  }
}

TEST_CASE("improvement trace is strictly decreasing") {
  Graph g = gen_random(12, 0.3, 9777);
  TradeoffResult r = approx_tradeoff(g, {1, 2, 6, 8});
  REQUIRE(!r.trace.empty());
  for (size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].second < r.trace[i - 1].second);
    CHECK(r.trace[i].first > r.trace[i - 1].first);
  }
  CHECK(r.trace.back().second == r.size);
}

TEST_CASE("tradeoff configuration is validated") {
  Graph g = cycle(5);
  CHECK_THROWS_AS(approx_tradeoff(g, {1, 1, 2, 8}), InputError);
  CHECK_THROWS_AS(approx_tradeoff(g, {-1, 2, 2, 8}), InputError);
  CHECK_THROWS_AS(approx_tradeoff(g, {0, 0, 2, 8}), InputError);
  CHECK_THROWS_AS(approx_tradeoff(g, {0, 1, -1, 8}), InputError);
  CHECK_THROWS_AS(approx_tradeoff(g, {3, 4, 12, 8}), ResourceError);
  CHECK_THROWS_WITH(approx_tradeoff(g, {3, 4, 12, 8}),
                    "subset enumeration of 10 exceeds the cap of 8");
  // a bound beyond n just exhausts the subsets
  TradeoffResult r = approx_tradeoff(g, {1, 2, 20, 16});
  CHECK(r.size == 2);
  CHECK(approx_tradeoff(Graph(0), {0, 1, 0, 8}).size == 0);
}
