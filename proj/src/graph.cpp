#include "domsetkit/graph.hpp"

#include <algorithm>
#include <cassert>

#include "domsetkit/errors.hpp"

namespace domsetkit {

Graph::Graph(int n, bool allow_multi) : n_(n), allow_multi_(allow_multi) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  adj_.resize(n);
  inc_.resize(n);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self loops are not allowed");
  if (u > v) std::swap(u, v);
  if (!allow_multi_ && has_edge(u, v)) throw InputError("duplicate edge");
  int id = static_cast<int>(edges_.size());
  edges_.emplace_back(u, v);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  inc_[u].push_back(id);
  inc_[v].push_back(id);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& a = adj_[degree(u) <= degree(v) ? u : v];
  int other = degree(u) <= degree(v) ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

bool Graph::has_parallel_edges() const {
  auto es = edges_;
  std::sort(es.begin(), es.end());
  return std::adjacent_find(es.begin(), es.end()) != es.end();
}

Graph Graph::simplified() const {
  Graph out(n_, false);
  auto es = edges_;
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  for (auto [u, v] : es) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> Graph::build_adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool is_dominating(const Graph& g, const VertexSet& s, const VertexSet& targets) {
  assert(s.universe() == g.n() && targets.universe() == g.n());
  VertexSet covered = s;
  s.for_each([&](int v) {
    for (int u : g.neighbors(v)) covered.set(u);
  });
  bool ok = true;
  targets.for_each([&](int v) {
    if (!covered.test(v)) ok = false;
  });
  return ok;
}

namespace {

void mark_component(const Graph& g, int root, std::vector<char>& visited) {
  std::vector<int> stack = {root};
  visited[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!visited[u]) {
        visited[u] = 1;
        stack.push_back(u);
      }
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> feedback_edge_set(const Graph& g) {
  // Build a spanning forest greedily over the edge list; every edge whose
  // endpoints are already connected is feedback. Handles parallel edges.
  std::vector<int> uf(g.n());
  for (int i = 0; i < g.n(); ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::pair<int, int>> fb;
  for (auto [u, v] : g.edges()) {
    int ru = find(u), rv = find(v);
    if (ru == rv)
      fb.emplace_back(u, v);
    else
      uf[ru] = rv;
  }
  return fb;
}

int feedback_edge_number(const Graph& g) {
  return g.m() - g.n() + component_count(g);
}

namespace {

bool vc_branch(const Graph& g, std::vector<char>& removed, int budget,
               VertexSet& acc, VertexSet& best, bool& found) {
  // Find any uncovered edge.
  int eu = -1, ev = -1;
  for (auto [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) {
      eu = u;
      ev = v;
      break;
    }
  }
  if (eu < 0) {
    if (!found || acc.count() < best.count()) best = acc;
    found = true;
    return true;
  }
  if (budget == 0) return false;
  bool any = false;
  for (int pick : {eu, ev}) {
    removed[pick] = 1;
    acc.set(pick);
    any |= vc_branch(g, removed, budget - 1, acc, best, found);
    acc.reset(pick);
    removed[pick] = 0;
  }
  return any;
}

}  // namespace

std::optional<VertexSet> min_vertex_cover(const Graph& g, int budget) {
  if (budget < 0) return std::nullopt;
  // Smallest k <= budget with a cover of size k; branching is exact.
  for (int k = 0; k <= budget; ++k) {
    std::vector<char> removed(g.n(), 0);
    VertexSet acc(g.n()), best(g.n());
    bool found = false;
    if (vc_branch(g, removed, k, acc, best, found)) return best;
  }
  return std::nullopt;
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<char> visited(g.n(), 0);
  int c = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (visited[v]) continue;
    mark_component(g, v, visited);
    for (int u = 0; u < g.n(); ++u)
      if (visited[u] && comp[u] < 0) comp[u] = c;
    ++c;
  }
  return comp;
}

int component_count(const Graph& g) {
  auto comp = component_ids(g);
  int c = 0;
  for (int x : comp) c = std::max(c, x + 1);
  return g.n() == 0 ? 0 : c;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  assert(keep.universe() == g.n());
  InducedSubgraph out;
  out.from_original.assign(g.n(), -1);
  keep.for_each([&](int v) {
    out.from_original[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  });
  out.graph = Graph(static_cast<int>(out.to_original.size()), g.multi_allowed());
  for (auto [u, v] : g.edges()) {
    if (keep.test(u) && keep.test(v))
      out.graph.add_edge(out.from_original[u], out.from_original[v]);
  }
  return out;
}

std::vector<std::vector<int>> biconnected_components(const Graph& g) {
  const int n = g.n();
  const auto& edges = g.edges();
  std::vector<int> tin(n, -1), low(n, 0), pedge(n, -1);
  std::vector<size_t> next(n, 0);
  std::vector<int> stack, estack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  for (int r = 0; r < n; ++r) {
    if (tin[r] != -1) continue;
    tin[r] = low[r] = timer++;
    stack.push_back(r);
    while (!stack.empty()) {
      int v = stack.back();
      if (next[v] < g.incident_edges(v).size()) {
        int eid = g.incident_edges(v)[next[v]++];
        if (eid == pedge[v]) continue;
        int u = edges[eid].first == v ? edges[eid].second : edges[eid].first;
        if (tin[u] == -1) {
          pedge[u] = eid;
          estack.push_back(eid);
          tin[u] = low[u] = timer++;
          stack.push_back(u);
        } else if (tin[u] < tin[v]) {
          estack.push_back(eid);
          low[v] = std::min(low[v], tin[u]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        int p = stack.back();
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= tin[p]) {
          // edges above and including the tree edge into v form one block
          blocks.emplace_back();
          int eid;
          do {
            eid = estack.back();
            estack.pop_back();
            blocks.back().push_back(eid);
          } while (eid != pedge[v]);
        }
      }
    }
  }
  assert(estack.empty());
  return blocks;
}

std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> nb(g.n(), VertexSet(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    nb[v].set(v);
    for (int u : g.neighbors(v)) nb[v].set(u);
  }
  return nb;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.n());
  s.for_each([&](int v) {
    for (int u : g.neighbors(v)) out.set(u);
  });
  out -= s;
  return out;
}

}  // namespace domsetkit
