#pragma once

#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit {

// Min-plus subset convolution h(R) = min over T ⊆ R of f(T) + g(R\T).
// Inputs are tables over all subsets of an m-element ground set (size 2^m),
// with kInfWeight marking empty cells.
std::vector<Weight> minplus_subset_convolution_naive(const std::vector<Weight>& f,
                                                     const std::vector<Weight>& g);

// Exact fast variant: walks candidate value pairs (a, b) of f x g in
// ascending a+b order and certifies h(R) = a+b via ranked counting subset
// convolutions of the value indicators (counts are exact: < 2^64). Falls back
// to the naive scan when the value-pair grid is large.
std::vector<Weight> minplus_subset_convolution(const std::vector<Weight>& f,
                                               const std::vector<Weight>& g);

}  // namespace domsetkit
