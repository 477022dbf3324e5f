#pragma once

#include <cstdint>
#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit {

// Reduction gadget: hitting-set instance -> graph whose minimum dominating
// set is exactly one larger than the minimum hitting set.
// Vertices: 0..u-1 universe, then one v_F per family set, then x, then y.
Graph gen_from_hitting_set(int universe_size, const std::vector<std::vector<int>>& family);

// Reduction gadget: set-cover instance -> graph whose minimum dominating set
// is exactly one larger than the minimum set cover. Same vertex layout.
Graph gen_from_set_cover(int universe_size, const std::vector<std::vector<int>>& family);

// G(n,p), deterministic for a fixed seed.
Graph gen_random(int n, double edge_probability, uint64_t seed);

// Random connected cactus: grows by attaching pendant edges or whole cycles
// at a random existing vertex.
Graph gen_cactus(int n, uint64_t seed);

// Random weights in [lo, hi], deterministic for a fixed seed.
WeightFn gen_weights(int n, Weight lo, Weight hi, uint64_t seed);

}  // namespace domsetkit
