#pragma once

#include <cstdint>
#include <vector>

#include "domsetkit/dp_tw.hpp"
#include "domsetkit/graph.hpp"

namespace domsetkit {

struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> family;
  std::vector<Weight> set_weights;  // empty = unit

  Weight weight_of(size_t j) const { return set_weights.empty() ? 1 : set_weights[j]; }
};

// All-subsets answer table: for every subset A of the universe, the minimum
// weight of a subfamily covering A, plus enough structure to recover one.
struct CoverTable {
  int universe_size = 0;
  std::vector<Weight> weight;       // indexed by element mask
  std::vector<int> choice;          // family index shrinking this mask; -1 at 0
  std::vector<uint32_t> set_masks;  // element mask per family set

  Weight weight_of(uint32_t mask) const { return weight[mask]; }
  // Family indices of a minimum-weight cover of `mask`, ascending.
  std::vector<int> chosen(uint32_t mask) const;
};

// Subset DP over the universe: entry(A) = min over family sets intersecting A
// of the set's weight plus entry(A minus the set). Throws ResourceError above
// the cap, InputError on malformed instances.
CoverTable solve_generalized(const SetCoverInstance& inst, int cap = 25);

struct GreedyCover {
  std::vector<int> chosen;  // in pick order
  Weight weight = 0;
};

// Classic ratio greedy: repeatedly take the set minimizing weight per newly
// covered element (ties: smaller set id). Guarantee: weight <= H_s * OPT
// with s the largest set size.
GreedyCover greedy_approx(const SetCoverInstance& inst);

// Greedy domination via the closed-neighborhood cover of g.
SolveResult greedy_dominating(const Graph& g, const WeightFn& w);

}  // namespace domsetkit
