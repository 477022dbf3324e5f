#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "domsetkit/graph.hpp"
#include "domsetkit/vertex_set.hpp"

namespace domsetkit {

struct TradeoffConfig {
  int alpha_num = 0;  // alpha = alpha_num / alpha_den, in [0, 1)
  int alpha_den = 1;
  int k = 0;           // solution size budget
  int max_subset = 8;  // cap on the enumeration size

  // floor(alpha * k) + 1
  int subset_bound() const;
};

struct TradeoffResult {
  VertexSet solution;
  int size = 0;
  VertexSet best_seed;  // the enumerated subset behind the returned solution
  int subset_bound = 0;
  uint64_t iterations = 0;
  bool early_exit = false;
  // (iteration, size) whenever the incumbent improved
  std::vector<std::pair<uint64_t, int>> trace;
};

// Seeded greedy domination: every subset U up to the size bound is removed
// from the graph, an apex standing for N(U) coverage is added, the rest is
// dominated by the cover greedy, and the smallest recombination U + greedy
// picks wins. The empty seed makes the plain greedy an always-present
// candidate; a seed that already dominates everything short-circuits the
// remaining enumeration.
TradeoffResult approx_tradeoff(const Graph& g, const TradeoffConfig& cfg);

}  // namespace domsetkit
