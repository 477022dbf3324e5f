#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "domsetkit/errors.hpp"
#include "domsetkit/generators.hpp"
#include "domsetkit/graph.hpp"
#include "domsetkit/modulator.hpp"
#include "domsetkit/oracle.hpp"
#include "support/builders.hpp"

namespace {

using namespace domsetkit;
using namespace domsetkit::testing;

VertexSet random_small_subset(int n, int max_size, std::mt19937_64& rng) {
  VertexSet s(n);
  int want = static_cast<int>(rng() % (max_size + 1));
  while (s.count() < std::min(want, n)) s.set(static_cast<int>(rng() % n));
  return s;
}

VertexSet complement(const VertexSet& s) {
  VertexSet out = VertexSet::full(s.universe());
  for (int v : s.to_vector()) out.reset(v);
  return out;
}

}  // namespace

TEST_CASE("modulator domination table: worked examples") {
  WeightFn unit = WeightFn::unit();

  Graph claw = star(3);
  ModulatorTable t = solve_generalized_modulator({claw, unit, VertexSet::of(4, {0}), 0});
  SolveResult empty = t.query(VertexSet(4));
  CHECK(empty.weight == 0);
  CHECK(empty.solution == VertexSet(4));
  SolveResult full = t.query(VertexSet::of(4, {0}));
  CHECK(full.weight == 1);
  CHECK(is_dominating(claw, full.solution, VertexSet::of(4, {0})));

  Graph p4 = path(4);
  WeightFn wp;
  wp.w = {1, 0, 0, 1};
  ModulatorTable ends = solve_generalized_modulator({p4, wp, VertexSet::of(4, {0, 3}), 0});
  SolveResult both = ends.query(VertexSet::of(4, {0, 3}));
  CHECK(both.weight == 0);
  CHECK(both.solution == VertexSet::of(4, {1, 2}));
}

TEST_CASE("modulator domination table: equals the oracle over every subset") {
  std::mt19937_64 rng(160893);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);
    Graph g = gen_random(n, 0.25 + 0.05 * static_cast<double>(rng() % 4), rng());
    WeightFn w = trial % 3 == 0 ? gen_weights(n, 0, 8, rng()) : WeightFn::unit();
    VertexSet m = random_small_subset(n, 6, rng);
    ModulatorTable t = solve_generalized_modulator({g, w, m, 0});
    std::vector<int> mv = m.to_vector();
    for (uint32_t am = 0; am < (uint32_t{1} << mv.size()); ++am) {
      VertexSet a(n);
      for (size_t i = 0; i < mv.size(); ++i)
        if (am >> i & 1) a.set(mv[i]);
      SolveResult got = t.query(a);
      OracleResult want = brute_min_dominating(g, w, a, VertexSet(n), VertexSet(n));
      CHECK(got.weight == want.weight);
      CHECK(is_dominating(g, got.solution, a));
      CHECK(w.total(got.solution) == got.weight);
    }
  }
}

TEST_CASE("gadget construction and soundness") {
  Graph p3 = path(3);
  WeightFn wb;
  wb.w = {1, 0, 1};
  ModulatorInstance inst{p3, wb, VertexSet::of(3, {1}), 0};
  DecompositionGadget gadget = decomposition_gadget(inst, VertexSet::of(3, {1}));
  CHECK(gadget.graph.n() == 3);  // the two endpoints plus the apex
  CHECK(gadget.apex == 2);
  CHECK(gadget.graph.has_edge(0, 2));
  CHECK(gadget.graph.has_edge(1, 2));
  CHECK(!gadget.graph.has_edge(0, 1));
  CHECK(gadget.weights(2) == 0);

  // Every gadget optimum bounds the rest-domination optimum from below.
  std::mt19937_64 rng(274177);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    Graph g = gen_random(n, 0.3, rng());
    WeightFn w = gen_weights(n, 1, 6, rng());
    VertexSet m = random_small_subset(n, 4, rng);
    Weight rest_opt =
        brute_min_dominating(g, w, complement(m), VertexSet(n), VertexSet(n)).weight;
    std::vector<int> mv = m.to_vector();
    for (uint32_t lm = 0; lm < (uint32_t{1} << mv.size()); ++lm) {
      VertexSet l(n);
      for (size_t i = 0; i < mv.size(); ++i)
        if (lm >> i & 1) l.set(mv[i]);
      DecompositionGadget gg = decomposition_gadget({g, w, m, 3}, l);
      OracleResult inner = brute_min_dominating(gg.graph, gg.weights);
      CHECK(inner.weight >= rest_opt);
    }
  }
}

TEST_CASE("decomposition domination: worked examples") {
  WeightFn unit = WeightFn::unit();

  Graph p3 = path(3);
  SolveResult everything =
      solve_decomposition_domination({p3, unit, VertexSet::full(3), 0});
  CHECK(everything.weight == 0);
  CHECK(everything.solution == VertexSet(3));

  // The shared vertex dominates both triangles, so one vertex suffices.
  Graph bowtie = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  SolveResult rest = solve_decomposition_domination({bowtie, unit, VertexSet::of(5, {0}), 2});
  Weight via_brute = brute_min_dominating(bowtie, unit, VertexSet::of(5, {1, 2, 3, 4}),
                                          VertexSet(5), VertexSet(5))
                         .weight;
  CHECK(rest.weight == via_brute);
  CHECK(rest.weight == 1);
  CHECK(is_dominating(bowtie, rest.solution, VertexSet::of(5, {1, 2, 3, 4})));

  WeightFn wb;
  wb.w = {1, 0, 1};
  SolveResult cheap = solve_decomposition_domination({p3, wb, VertexSet::of(3, {1}), 0});
  CHECK(cheap.weight == 0);
  CHECK(cheap.solution == VertexSet::of(3, {1}));
}

TEST_CASE("decomposition domination: equals the oracle") {
  std::mt19937_64 rng(654321);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);
    Graph g = trial % 4 == 0 ? gen_cactus(n, rng()) : gen_random(n, 0.3, rng());
    WeightFn w = trial % 3 == 0 ? gen_weights(n, 0, 8, rng()) : WeightFn::unit();
    VertexSet m = random_small_subset(n, 6, rng);
    int d = trial % 4 == 0 ? 2 : 3;
    SolveResult got = solve_decomposition_domination({g, w, m, d});
    OracleResult want = brute_min_dominating(g, w, complement(m), VertexSet(n), VertexSet(n));
    CHECK(got.weight == want.weight);
    CHECK(is_dominating(g, got.solution, complement(m)));
    CHECK(w.total(got.solution) == got.weight);
  }
}

TEST_CASE("decomposition domination: width bound enforced for small d") {
  Graph k5 = complete(5);
  CHECK_THROWS_AS(
      solve_decomposition_domination({k5, WeightFn::unit(), VertexSet::of(5, {0}), 2}),
      WidthExceededError);
}

TEST_CASE("two-sided modulator pipeline: worked examples") {
  WeightFn unit = WeightFn::unit();

  Graph edgeless(3);
  auto [r1, c1] = approx2_twd({edgeless, unit, VertexSet(3), 0});
  CHECK(r1.solution == VertexSet::full(3));
  CHECK(r1.weight == 3);
  CHECK(c1.verified);

  Graph c6 = cycle(6);
  auto [r2, c2] = approx2_twd({c6, unit, VertexSet::of(6, {0}), 2});
  CHECK(c2.verified);
  CHECK(r2.weight <= 4);

  Graph k4 = complete(4);
  auto [r3, c3] = approx2_twd({k4, unit, VertexSet::of(4, {0}), 2});
  CHECK(c3.verified);
  CHECK(r3.weight <= 2);
}

TEST_CASE("two-sided modulator pipeline: ratio and halves") {
  std::mt19937_64 rng(902100);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    Graph g = gen_random(n, 0.35, rng());
    WeightFn w = trial % 3 == 0 ? gen_weights(n, 1, 9, rng()) : WeightFn::unit();
    VertexSet m = random_small_subset(n, 5, rng);
    auto [r, cert] = approx2_twd({g, w, m, 3});
    Weight opt = brute_min_dominating(g, w).weight;
    CHECK(cert.verified);
    CHECK(is_dominating(g, r.solution, VertexSet::full(n)));
    CHECK(r.weight <= 2 * opt);
    CHECK(cert.modulator_half <= opt);
    CHECK(cert.rest_half <= opt);
  }
}

TEST_CASE("vertex-cover solver: worked examples") {
  WeightFn unit = WeightFn::unit();

  Graph k14 = star(4);
  CHECK(solve_exact_vc(k14, unit).weight == 1);

  Graph c5 = cycle(5);
  SolveResult r = solve_exact_vc(c5, unit);
  CHECK(r.weight == 2);
  CHECK(is_dominating(c5, r.solution, VertexSet::full(5)));

  Graph p4 = path(4);
  WeightFn wp;
  wp.w = {10, 1, 1, 10};
  CHECK(solve_exact_vc(p4, wp).weight == 2);
}

TEST_CASE("vertex-cover solver: equals the oracle") {
  std::mt19937_64 rng(333111);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 12);
    Graph g = gen_random(n, 0.1 + 0.05 * static_cast<double>(rng() % 7), rng());
    WeightFn w = trial % 4 == 0 ? gen_weights(n, 0, 10, rng()) : WeightFn::unit();
    SolveResult got = solve_exact_vc(g, w);
    OracleResult want = brute_min_dominating(g, w);
    CHECK(got.weight == want.weight);
    CHECK(is_dominating(g, got.solution, VertexSet::full(n)));
    CHECK(w.total(got.solution) == got.weight);
    // Any vertex cover drives the same answer, minimal or not.
    if (trial % 5 == 0) {
      VertexSet cover = min_vertex_cover(g, n).value();
      for (int v = 0; v < n && cover.count() < std::min(n, 12); ++v)
        if (!cover.test(v)) cover.set(v);
      CHECK(solve_exact_vc(g, w, cover).weight == want.weight);
    }
  }
}

TEST_CASE("vertex-cover solver: input validation") {
  Graph p3 = path(3);
  CHECK_THROWS_AS(solve_exact_vc(p3, WeightFn::unit(), VertexSet::of(3, {0})), InputError);
  CHECK_THROWS_AS(solve_exact_vc(p3, WeightFn::unit(), VertexSet(4)), InputError);

  Graph big = gen_random(27, 0.2, 5);
  CHECK_THROWS_AS(solve_exact_vc(big, WeightFn::unit(), VertexSet::full(27)), ResourceError);
}

TEST_CASE("modulator search") {
  CHECK(find_modulator(star(5), 0) == VertexSet::of(6, {0}));
  CHECK(find_modulator(cycle(5), 0).count() == 3);
  CHECK(find_modulator(cycle(5), 1) == VertexSet::of(5, {0}));
  CHECK(find_modulator(cycle(5), 2) == VertexSet(5));

  Graph bowtie = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  CHECK(find_modulator(bowtie, 1) == VertexSet::of(5, {0}));

  std::mt19937_64 rng(87);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 5 + static_cast<int>(rng() % 6);
    Graph g = gen_random(n, 0.4, rng());
    VertexSet m = find_modulator(g, 1);
    VertexSet keep = complement(m);
    RawDecomposition raw = decompose_bounded_raw(induced_subgraph(g, keep).graph, 1);
    CHECK(raw.width() <= 1);
  }

  CHECK_THROWS_AS(find_modulator(gen_random(21, 0.1, 9), 1), ResourceError);
}
