#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "doctest.h"
#include "domsetkit/errors.hpp"
#include "domsetkit/setcover.hpp"

namespace {

using namespace domsetkit;

// Random instance whose family union is the whole universe.
SetCoverInstance random_instance(int universe, int sets, std::mt19937_64& rng, Weight max_w) {
  SetCoverInstance inst;
  inst.universe_size = universe;
  for (int j = 0; j < sets; ++j) {
    std::vector<int> s;
    for (int e = 0; e < universe; ++e)
      if (rng() % 3 == 0) s.push_back(e);
    inst.family.push_back(std::move(s));
    inst.set_weights.push_back(static_cast<Weight>(rng() % (max_w + 1)));
  }
  std::vector<char> seen(universe, 0);
  for (const auto& s : inst.family)
    for (int e : s) seen[e] = 1;
  for (int e = 0; e < universe; ++e)
    if (!seen[e]) inst.family[rng() % sets].push_back(e);
  return inst;
}

// Minimum over all subfamilies covering `target`, by direct enumeration.
Weight brute_cover(const SetCoverInstance& inst, uint32_t target) {
  size_t m = inst.family.size();
  std::vector<uint32_t> masks(m, 0);
  for (size_t j = 0; j < m; ++j)
    for (int e : inst.family[j]) masks[j] |= uint32_t{1} << e;
  Weight best = kInfWeight;
  for (uint32_t pick = 0; pick < (uint32_t{1} << m); ++pick) {
    uint32_t covered = 0;
    Weight total = 0;
    for (size_t j = 0; j < m; ++j)
      if (pick >> j & 1) {
        covered |= masks[j];
        total = sat_add(total, inst.weight_of(j));
      }
    if ((covered & target) == target) best = std::min(best, total);
  }
  return best;
}

}  // namespace

TEST_CASE("generalized cover table: worked examples") {
  SetCoverInstance inst;
  inst.universe_size = 2;
  inst.family = {{0}, {1}, {0, 1}};
  inst.set_weights = {1, 1, 1};
  CoverTable t = solve_generalized(inst);
  CHECK(t.weight_of(0) == 0);
  CHECK(t.chosen(0).empty());
  CHECK(t.weight_of(0b11) == 1);
  CHECK(t.chosen(0b11) == std::vector<int>{2});
  CHECK(t.weight_of(0b01) == 1);
}

TEST_CASE("generalized cover table: equals subfamily enumeration") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 15; ++trial) {
    int universe = 1 + static_cast<int>(rng() % 8);
    int sets = 1 + static_cast<int>(rng() % 12);
    SetCoverInstance inst = random_instance(universe, sets, rng, trial % 3 == 0 ? 0 : 9);
    CoverTable t = solve_generalized(inst);
    for (uint32_t a = 0; a < (uint32_t{1} << universe); ++a) {
      CHECK(t.weight_of(a) == brute_cover(inst, a));
      // The recovered subfamily really covers a at the claimed weight.
      uint32_t covered = 0;
      Weight total = 0;
      for (int j : t.chosen(a)) {
        covered |= t.set_masks[j];
        total = sat_add(total, inst.weight_of(j));
      }
      CHECK((covered & a) == a);
      CHECK(total == t.weight_of(a));
    }
  }
}

TEST_CASE("generalized cover table: monotone in the target subset") {
  std::mt19937_64 rng(11001);
  for (int trial = 0; trial < 10; ++trial) {
    int universe = 2 + static_cast<int>(rng() % 7);
    SetCoverInstance inst = random_instance(universe, 3 + static_cast<int>(rng() % 8), rng, 7);
    CoverTable t = solve_generalized(inst);
    for (uint32_t a = 1; a < (uint32_t{1} << universe); ++a)
      for (int e = 0; e < universe; ++e)
        if (a >> e & 1) CHECK(t.weight_of(a & ~(uint32_t{1} << e)) <= t.weight_of(a));
  }
}

TEST_CASE("generalized cover table: input validation") {
  SetCoverInstance inst;
  inst.universe_size = 26;
  inst.family = {{0}};
  CHECK_THROWS_AS(solve_generalized(inst), ResourceError);

  inst.universe_size = 2;
  inst.family = {{0, 5}};
  CHECK_THROWS_AS(solve_generalized(inst), InputError);

  inst.family = {{0}};  // element 1 uncovered
  CHECK_THROWS_AS(solve_generalized(inst), InputError);

  inst.family = {{0}, {1}};
  inst.set_weights = {1};
  CHECK_THROWS_AS(solve_generalized(inst), InputError);

  inst.set_weights = {1, -2};
  CHECK_THROWS_AS(solve_generalized(inst), InputError);
}

TEST_CASE("ratio greedy: worked examples") {
  SetCoverInstance whole;
  whole.universe_size = 4;
  whole.family = {{0, 1, 2, 3}};
  GreedyCover g = greedy_approx(whole);
  CHECK(g.chosen == std::vector<int>{0});
  CHECK(g.weight == 1);

  SetCoverInstance six;
  six.universe_size = 6;
  six.family = {{0, 1, 2, 3}, {0, 1}, {2, 3}, {4, 5}};
  six.set_weights = {1, 1, 1, 1};
  g = greedy_approx(six);
  CHECK(g.chosen == std::vector<int>{0, 3});
  CHECK(g.weight == 2);
  CHECK(g.weight == solve_generalized(six).weight_of(0b111111));

  SetCoverInstance pair;
  pair.universe_size = 2;
  pair.family = {{0}, {1}, {0, 1}};
  pair.set_weights = {1, 1, 3};
  g = greedy_approx(pair);
  CHECK(g.weight == 2);
  CHECK(g.chosen == std::vector<int>{0, 1});
}

TEST_CASE("ratio greedy: always covers, within the harmonic bound") {
  std::mt19937_64 rng(770077);
  for (int trial = 0; trial < 40; ++trial) {
    int universe = 1 + static_cast<int>(rng() % 8);
    SetCoverInstance inst = random_instance(universe, 2 + static_cast<int>(rng() % 10), rng, 6);
    GreedyCover g = greedy_approx(inst);
    uint32_t covered = 0;
    size_t largest = 1;
    std::vector<uint32_t> masks(inst.family.size(), 0);
    for (size_t j = 0; j < inst.family.size(); ++j) {
      for (int e : inst.family[j]) masks[j] |= uint32_t{1} << e;
      largest = std::max<size_t>(largest, std::popcount(masks[j]));
    }
    for (int j : g.chosen) covered |= masks[j];
    CHECK(covered == (uint32_t{1} << universe) - 1);
    long double harmonic = 0;
    for (size_t i = 1; i <= largest; ++i) harmonic += 1.0L / static_cast<long double>(i);
    Weight opt = solve_generalized(inst).weight_of((uint32_t{1} << universe) - 1);
    CHECK(static_cast<long double>(g.weight) <=
          harmonic * static_cast<long double>(opt) + 1e-9L);
  }
}
