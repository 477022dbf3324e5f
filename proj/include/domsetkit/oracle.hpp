#pragma once

#include <optional>
#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit {

struct OracleResult {
  Weight weight = kInfWeight;          // kInfWeight when infeasible
  std::optional<VertexSet> witness;    // absent when infeasible
  long long optimum_count = 0;

  bool feasible() const { return witness.has_value(); }
};

// Exact minimum over all S with forced_in ⊆ S, S ∩ forbidden = ∅ and S
// dominating every vertex of `targets`. Subsets are enumerated in Gray-code
// order with incremental coverage counters. Cap: n ≤ 22.
OracleResult brute_min_dominating(const Graph& g, const WeightFn& w,
                                  const VertexSet& targets, const VertexSet& forced_in,
                                  const VertexSet& forbidden);

// Unconstrained convenience wrapper: dominate all of V(g).
OracleResult brute_min_dominating(const Graph& g, const WeightFn& w = WeightFn::unit());

struct CoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> family;
  std::vector<Weight> set_weights;  // empty = unit
};

struct CoverResult {
  Weight weight = kInfWeight;
  std::vector<int> chosen;  // element ids (hitting set) or family indices (set cover)
  bool feasible = false;
};

// Exact minimum hitting set: pick elements of the universe hitting every
// family set. Caps: universe ≤ 16, family ≤ 16.
CoverResult brute_min_hitting_set(const CoverInstance& inst);

// Exact minimum set cover: pick family sets covering the universe.
CoverResult brute_min_set_cover(const CoverInstance& inst);

}  // namespace domsetkit
