#pragma once

#include <utility>
#include <vector>

#include "domsetkit/decomp.hpp"
#include "domsetkit/graph.hpp"

namespace domsetkit {

struct SolveResult {
  VertexSet solution;
  Weight weight = 0;
};

enum class JoinMode { Auto, Naive, Convolution };

// Minimum-weight S dominating every vertex of d_set (vertices outside d_set
// need not be dominated). Ties broken toward the lexicographically smallest
// solution by vertex id. Auto join switches to the subset-convolution
// combinator when the free D-positions of a join slice exceed 8.
SolveResult solve_half_width(const Graph& g, const WeightFn& w, const NiceTreeDecomposition& td,
                             const VertexSet& d_set, JoinMode mode = JoinMode::Auto);

// Minimum-weight dominating set: solve_half_width with d_set = V(G).
SolveResult solve_exact_tw(const Graph& g, const WeightFn& w, const NiceTreeDecomposition& td,
                           JoinMode mode = JoinMode::Auto);

struct Approx2Certificate {
  Weight half1 = 0;  // optimum weight dominating V1; a lower bound on OPT
  Weight half2 = 0;  // likewise for V2
  int slack = 0;     // balanced-partition slack
  bool verified = false;
};

// Two-sided pipeline: split V with balanced_partition, solve each half with
// the half-width DP, return the union. Weight <= half1 + half2 <= 2 OPT.
std::pair<SolveResult, Approx2Certificate> approx2_tw(const Graph& g, const WeightFn& w,
                                                      const NiceTreeDecomposition& td);

// Introspection for property tests: the per-node tables of the half-width
// DP. Entry order is the mixed-radix state index over bag positions
// (vertices ascending, low position = least significant): vertices outside
// d_set code {0=out, 1=in solution}; d_set vertices code {0=no requirement,
// 1=dominated by the partial solution, 2=in solution}.
struct NodeStates {
  std::vector<int> bag;
  std::vector<Weight> table;
};
std::vector<NodeStates> half_width_tables(const Graph& g, const WeightFn& w,
                                          const NiceTreeDecomposition& td, const VertexSet& d_set,
                                          JoinMode mode = JoinMode::Auto);

}  // namespace domsetkit
