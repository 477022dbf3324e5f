#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit::testing {

// Biconnected components as edge-id lists (recursive lowpoint DFS; test scale).
inline std::vector<std::vector<int>> biconnected_components(const Graph& g) {
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> comps;
  int timer = 0;

  struct Frame {
    int v, parent_edge, idx;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident_edges(f.v);
      if (f.idx < static_cast<int>(inc.size())) {
        int eid = inc[f.idx++];
        if (eid == f.parent_edge) continue;
        auto [a, b] = g.edges()[eid];
        int u = a == f.v ? b : a;
        if (disc[u] < 0) {
          edge_stack.push_back(eid);
          disc[u] = low[u] = timer++;
          stack.push_back({u, eid, 0});
        } else if (disc[u] < disc[f.v]) {
          edge_stack.push_back(eid);
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) continue;
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          std::vector<int> comp;
          while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == pe) break;
          }
          if (!comp.empty()) comps.push_back(std::move(comp));
        }
      }
    }
  }
  return comps;
}

// Cactus: every biconnected component is a single edge or a single cycle.
inline bool cactus_by_bicomps(const Graph& g) {
  for (const auto& comp : testing::biconnected_components(g)) {
    if (comp.size() == 1) continue;
    std::set<int> verts;
    for (int eid : comp) {
      verts.insert(g.edges()[eid].first);
      verts.insert(g.edges()[eid].second);
    }
    if (comp.size() != verts.size()) return false;
  }
  return true;
}

}  // namespace domsetkit::testing
