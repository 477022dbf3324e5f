#include "domsetkit/fes.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "domsetkit/decomp.hpp"
#include "domsetkit/errors.hpp"

namespace domsetkit {

namespace {

struct DfsForest {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> tin;   // preorder entry time
  std::vector<int> tout;  // subtree = tins in [tin, tout)
  std::vector<std::vector<int>> children;  // ascending id
  std::vector<int> roots;
};

DfsForest build_forest(const Graph& g) {
  const int n = g.n();
  DfsForest t;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  t.tin.assign(n, -1);
  t.tout.assign(n, -1);
  t.children.assign(n, {});
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
    std::sort(adj[v].begin(), adj[v].end());
  }
  std::vector<size_t> next(n, 0);
  std::vector<int> stack;
  int timer = 0;
  for (int r = 0; r < n; ++r) {
    if (t.tin[r] != -1) continue;
    t.roots.push_back(r);
    t.tin[r] = timer++;
    stack.push_back(r);
    while (!stack.empty()) {
      int v = stack.back();
      if (next[v] < adj[v].size()) {
        int u = adj[v][next[v]++];
        if (t.tin[u] != -1) continue;
        t.parent[u] = v;
        t.depth[u] = t.depth[v] + 1;
        t.children[v].push_back(u);
        t.tin[u] = timer++;
        stack.push_back(u);
      } else {
        t.tout[v] = timer;
        stack.pop_back();
      }
    }
  }
  return t;
}

}  // namespace

FesModulatorResult fes_modulator(const Graph& g) {
  assert(!g.has_parallel_edges());
  const int n = g.n();
  DfsForest t = build_forest(g);

  FesModulatorResult out;
  out.m = VertexSet(n);
  out.parent = t.parent;

  auto is_anc = [&](int x, int y) { return t.tin[x] <= t.tin[y] && t.tin[y] < t.tout[x]; };

  std::vector<std::vector<int>> tops_at(n);
  for (const auto& [a, b] : g.edges()) {
    if (t.parent[a] == b || t.parent[b] == a) continue;
    int top = t.depth[a] < t.depth[b] ? a : b;
    int bot = top == a ? b : a;
    assert(is_anc(top, bot));
    assert(t.depth[bot] - t.depth[top] >= 2);  // a one-edge span would be a parallel edge
    tops_at[top].push_back(static_cast<int>(out.f.size()));
    out.f.emplace_back(top, bot);
  }

  // Preorder scan. While an edge is tracked the traversal is inside its span,
  // so the child continuing the span is pushed last and popped first; the
  // tracked edge clears at its bottom, at a deletion, and at component roots.
  std::vector<int> stack;
  for (int r : t.roots) {
    int e = -1;
    stack.push_back(r);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (e != -1 && out.f[e].second == v) e = -1;
      const std::vector<int>& tops = tops_at[v];
      if (!tops.empty()) {
        if (tops.size() >= 2 || e != -1) {
          out.m.set(v);
          out.removal_order.push_back(v);
          e = -1;
        } else {
          e = tops[0];
        }
      }
      int down = -1;
      if (e != -1) {
        int bot = out.f[e].second;
        assert(v != bot && is_anc(v, bot));
        for (int c : t.children[v]) {
          if (is_anc(c, bot)) {
            down = c;
            break;
          }
        }
        assert(down != -1);
      }
      for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it)
        if (*it != down) stack.push_back(*it);
      if (down != -1) stack.push_back(down);
    }
  }

  // Reconstruct the deactivation log from deletion prefixes: an edge is live
  // while its endpoints survive and some cycle still crosses it.
  std::vector<char> removed(n, 0);
  auto on_cycle = [&](int idx) {
    auto [a, b] = out.f[idx];
    if (removed[a] || removed[b]) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{a};
    seen[a] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int u : g.neighbors(v)) {
        if (v == a && u == b) continue;
        if (removed[u] || seen[u]) continue;
        if (u == b) return true;
        seen[u] = 1;
        queue.push_back(u);
      }
    }
    return false;
  };

  std::vector<char> alive(out.f.size(), 1);
  for (size_t j = 0; j < out.f.size(); ++j) assert(on_cycle(static_cast<int>(j)));
  out.deactivated.resize(out.removal_order.size());
  for (size_t i = 0; i < out.removal_order.size(); ++i) {
    removed[out.removal_order[i]] = 1;
    for (size_t j = 0; j < out.f.size(); ++j) {
      if (alive[j] && !on_cycle(static_cast<int>(j))) {
        alive[j] = 0;
        out.deactivated[i].push_back(static_cast<int>(j));
      }
    }
    assert(out.deactivated[i].size() >= 2);
  }
  return out;
}

bool is_cactus(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<int> mark(g.n(), -1);
  int block = 0;
  for (const std::vector<int>& ids : biconnected_components(g)) {
    int nv = 0;
    for (int eid : ids) {
      for (int x : {edges[eid].first, edges[eid].second}) {
        if (mark[x] != block) {
          mark[x] = block;
          ++nv;
        }
      }
    }
    ++block;
    int ne = static_cast<int>(ids.size());
    if (ne != 1 && ne != nv) return false;
  }
  return true;
}

SolveResult solve_exact_fes(const Graph& g, const WeightFn& w) {
  FesModulatorResult mod = fes_modulator(g);
  if (mod.m.count() > 25)
    throw ResourceError("feedback-edge modulator of " + std::to_string(mod.m.count()) +
                        " exceeds the cap of 25");
  if (g.n() == 0) return {VertexSet(0), 0};

  VertexSet rest = VertexSet::full(g.n());
  mod.m.for_each([&](int v) { rest.reset(v); });
  InducedSubgraph sub = induced_subgraph(g, rest);
  RawDecomposition raw = decompose_bounded_raw(sub.graph, 2);
  raw = remap_decomposition(raw, sub.to_original, g.n());
  raw = add_to_all_bags(raw, g.n(), mod.m);
  NiceTreeDecomposition td = make_nice(raw, g);
  return solve_exact_tw(g, w, td);
}

}  // namespace domsetkit
