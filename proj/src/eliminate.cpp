#include <algorithm>
#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include "domsetkit/compress.hpp"
#include "domsetkit/errors.hpp"

namespace domsetkit {

namespace {

struct EdgeRec {
  int a = -1, b = -1;
  std::vector<int> path;  // original vertex chain a..b
  bool alive = false;
};

std::vector<int> oriented(const EdgeRec& e, int from) {
  std::vector<int> p = e.path;
  if (p.front() != from) std::reverse(p.begin(), p.end());
  assert(p.front() == from);
  return p;
}

EliminationResult eliminate_core(const Graph& g, EliminationOrder order) {
  const int n = g.n();
  EliminationResult out;
  out.kernel_vertices = VertexSet(n);

  std::vector<EdgeRec> recs;
  recs.reserve(g.m());
  std::vector<std::vector<int>> inc(n);
  for (int i = 0; i < g.m(); ++i) {
    auto [a, b] = g.edges()[i];
    recs.push_back({a, b, {a, b}, true});
    inc[a].push_back(i);
    inc[b].push_back(i);
  }
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(inc[v].size());

  std::vector<char> queued(n, 0), gone(n, 0), recorded(n, 0);
  std::vector<int> queue;
  size_t head = 0;
  auto enqueue = [&](int v) {
    if (!queued[v] && !gone[v] && deg[v] <= 2) {
      queued[v] = 1;
      queue.push_back(v);
    }
  };
  if (order == EliminationOrder::Ascending) {
    for (int v = 0; v < n; ++v) enqueue(v);
  } else {
    for (int v = n - 1; v >= 0; --v) enqueue(v);
  }

  auto other = [&](int id, int v) { return recs[id].a == v ? recs[id].b : recs[id].a; };
  auto record_cycle = [&](std::vector<int> cyc) {
    for (int x : cyc) recorded[x] = 1;
    out.cycles.push_back(std::move(cyc));
  };

  while (head < queue.size()) {
    int v = queue[head++];
    queued[v] = 0;
    if (gone[v]) continue;
    std::vector<int> ids;
    for (int id : inc[v])
      if (recs[id].alive) ids.push_back(id);
    inc[v] = ids;
    assert(static_cast<int>(ids.size()) == deg[v] && deg[v] <= 2);
    gone[v] = 1;
    out.elimination_order.push_back(v);

    if (deg[v] == 0) {
      if (!recorded[v]) record_cycle({v});
      continue;
    }
    if (deg[v] == 1) {
      // leaf: the contracted chain unpacks into bridges and bare nodes
      int id = ids[0];
      int w = other(id, v);
      std::vector<int> chain = oriented(recs[id], v);
      recs[id].alive = false;
      --deg[w];
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        out.bridges.push_back({chain[i], chain[i + 1]});
        if (!recorded[chain[i]]) record_cycle({chain[i]});
      }
      enqueue(w);
      continue;
    }
    int id1 = ids[0], id2 = ids[1];
    int u = other(id1, v), w = other(id2, v);
    if (u == w) {
      // parallel pair: the two chains close a cycle anchored at the survivor
      std::vector<int> cyc = oriented(recs[id1], w);           // w .. v
      std::vector<int> back = oriented(recs[id2], v);          // v .. w
      cyc.insert(cyc.end(), back.begin() + 1, back.end() - 1);
      recs[id1].alive = false;
      recs[id2].alive = false;
      deg[w] -= 2;
      record_cycle(std::move(cyc));
      enqueue(w);
      continue;
    }
    // splice the two chains into one contracted edge (u, w)
    std::vector<int> p = oriented(recs[id1], u);               // u .. v
    std::vector<int> tail = oriented(recs[id2], v);            // v .. w
    p.insert(p.end(), tail.begin() + 1, tail.end());
    recs[id1].alive = false;
    recs[id2].alive = false;
    int nid = static_cast<int>(recs.size());
    recs.push_back({u, w, std::move(p), true});
    inc[u].push_back(nid);
    inc[w].push_back(nid);
    // degrees of u and w are unchanged
  }

  for (int v = 0; v < n; ++v) {
    if (!gone[v]) {
      assert(deg[v] >= 3);
      out.kernel_vertices.set(v);
    }
  }
  for (const EdgeRec& e : recs) {
    if (!e.alive) continue;
    assert(out.kernel_vertices.test(e.a) && out.kernel_vertices.test(e.b));
    out.kernel_edges.push_back({e.a, e.b});
    out.kernel_paths.push_back(e.path);
  }
  return out;
}

}  // namespace

EliminationResult eliminate(const Graph& g, EliminationOrder order) {
  if (g.has_parallel_edges()) throw InputError("elimination requires a simple graph");
  if (g.n() > 0 && component_count(g) != 1)
    throw InputError("elimination requires a connected graph");
  return eliminate_core(g, order);
}

CactusKernelDecomposition cactus_kernel(const Graph& g) {
  if (g.has_parallel_edges()) throw InputError("cactus kernel requires a simple graph");
  const int n = g.n();
  CactusKernelDecomposition out;
  out.elim = eliminate_core(g, EliminationOrder::Ascending);
  out.k = feedback_edge_number(g);
  assert(static_cast<int>(out.elim.kernel_vertices.count()) <= 2 * out.k);
  assert(static_cast<int>(out.elim.kernel_edges.size()) <= 3 * out.k);

  std::map<std::pair<int, int>, int> eid;
  for (int i = 0; i < g.m(); ++i) {
    auto [a, b] = g.edges()[i];
    eid[{std::min(a, b), std::max(a, b)}] = i;
  }
  std::vector<char> on_path(g.m(), 0);
  out.kernel_span = VertexSet(n);
  for (const std::vector<int>& path : out.elim.kernel_paths) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      int a = path[i], b = path[i + 1];
      out.kernel_span.set(a);
      out.kernel_span.set(b);
      auto it = eid.find({std::min(a, b), std::max(a, b)});
      assert(it != eid.end());
      assert(!on_path[it->second]);  // kernel paths are edge-disjoint
      on_path[it->second] = 1;
    }
  }

  out.cactus_span = VertexSet(n);
  std::vector<std::vector<int>> cadj(n);
  for (int i = 0; i < g.m(); ++i) {
    if (on_path[i]) continue;
    auto [a, b] = g.edges()[i];
    out.cactus_span.set(a);
    out.cactus_span.set(b);
    cadj[a].push_back(b);
    cadj[b].push_back(a);
  }
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) out.cactus_span.set(v);

  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (!out.cactus_span.test(s) || comp[s] != -1) continue;
    int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> bfs{s};
    comp[s] = c;
    for (size_t i = 0; i < bfs.size(); ++i) {
      int v = bfs[i];
      members[c].push_back(v);
      for (int u : cadj[v]) {
        if (comp[u] == -1) {
          comp[u] = c;
          bfs.push_back(u);
        }
      }
    }
  }

  std::vector<int> last(members.size(), -1);
  for (int v : out.elim.elimination_order)
    if (comp[v] != -1) last[comp[v]] = v;

  std::vector<int> roots(members.size(), -1);
  for (size_t c = 0; c < members.size(); ++c) {
    int hits = 0;
    for (int v : members[c]) {
      if (out.kernel_span.test(v)) {
        roots[c] = v;
        ++hits;
      }
    }
    if (hits == 0) {
      // fully collapsed component: root where the elimination ended
      roots[c] = last[c];
      out.kernel_span.set(roots[c]);
    } else {
      assert(hits == 1);  // each cactus meets the kernel in one vertex
    }
  }

  std::vector<int> order(members.size());
  for (size_t c = 0; c < members.size(); ++c) order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return roots[a] < roots[b]; });

  for (int c : order) {
    std::vector<std::vector<int>> cycles;
    for (const std::vector<int>& cyc : out.elim.cycles)
      if (comp[cyc.front()] == c) cycles.push_back(cyc);
    std::vector<std::pair<int, int>> bridges;
    for (auto [x, y] : out.elim.bridges)
      if (comp[x] == c) bridges.push_back({x, y});
    out.cacti.push_back(build_cactus_tree(cycles, bridges, roots[c]));
  }
  return out;
}

}  // namespace domsetkit
