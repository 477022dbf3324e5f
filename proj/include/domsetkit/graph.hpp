#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "domsetkit/vertex_set.hpp"

namespace domsetkit {

using Weight = int64_t;

// Saturating infinity for weight arithmetic.
inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::max() / 2;

inline Weight sat_add(Weight a, Weight b) {
  return (a >= kInfWeight || b >= kInfWeight) ? kInfWeight : a + b;
}

// Undirected graph over dense vertex ids 0..n-1. Self loops are rejected.
// Parallel edges are representable only when allow_multi is set; solver entry
// points require simple graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, bool allow_multi = false);

  void add_edge(int u, int v);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool multi_allowed() const { return allow_multi_; }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool has_parallel_edges() const;

  // Copy with parallel edges deduplicated.
  Graph simplified() const;

  // Rebuilds the adjacency index from the edge list.
  std::vector<std::vector<int>> build_adjacency() const;

 private:
  int n_ = 0;
  bool allow_multi_ = false;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

// Natural-number vertex weights; unit when the vector is empty.
struct WeightFn {
  std::vector<Weight> w;

  static WeightFn unit() { return WeightFn{}; }
  bool is_unit() const { return w.empty(); }

  Weight operator()(int v) const { return w.empty() ? 1 : w[v]; }

  Weight total(const VertexSet& s) const {
    Weight t = 0;
    s.for_each([&](int v) { t = sat_add(t, (*this)(v)); });
    return t;
  }
};

// True when every vertex of `targets` has a closed neighbor in `s`.
bool is_dominating(const Graph& g, const VertexSet& s, const VertexSet& targets);

// Non-tree edges of a DFS spanning forest. |result| = m - n + #components.
std::vector<std::pair<int, int>> feedback_edge_set(const Graph& g);
int feedback_edge_number(const Graph& g);

// Minimum vertex cover if its size is <= budget, otherwise nullopt.
std::optional<VertexSet> min_vertex_cover(const Graph& g, int budget);

int component_count(const Graph& g);
// Component id per vertex, numbered by smallest contained vertex order.
std::vector<int> component_ids(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new id -> original id
  std::vector<int> from_original;  // original id -> new id, -1 outside
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Biconnected components as edge-id lists; every edge appears exactly once.
std::vector<std::vector<int>> biconnected_components(const Graph& g);

// Closed neighborhood N[v] for every vertex.
std::vector<VertexSet> closed_neighborhoods(const Graph& g);

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

}  // namespace domsetkit
