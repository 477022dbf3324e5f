#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "domsetkit/compress.hpp"
#include "domsetkit/errors.hpp"
#include "domsetkit/fes.hpp"
#include "domsetkit/oracle.hpp"

namespace domsetkit {

namespace {

void check_instance(const RdsInstance& inst) {
  if (inst.w.universe() != inst.g.n())
    throw InputError("exempt set universe does not match the graph");
  if (inst.g.has_parallel_edges()) throw InputError("reduction requires a simple graph");
}

// Mutable instance shared by the reductions. Every change to the graph or
// the exempt set is recorded on the current trace step so that the step can
// be inverted during lifting.
struct Workspace {
  int n = 0;
  std::vector<std::set<int>> adj;
  std::vector<char> alive;
  VertexSet w;
  VertexSet forced;  // original ids
  Weight delta = 0;
  std::vector<TraceStep> trace;

  static Workspace from(const RdsInstance& inst) {
    check_instance(inst);
    Workspace ws;
    ws.n = inst.g.n();
    ws.adj.resize(ws.n);
    ws.alive.assign(ws.n, 1);
    ws.w = inst.w;
    ws.forced = VertexSet(ws.n);
    for (auto [a, b] : inst.g.edges()) {
      ws.adj[a].insert(b);
      ws.adj[b].insert(a);
    }
    return ws;
  }

  int deg(int v) const { return static_cast<int>(adj[v].size()); }

  TraceStep& step(const char* rule) {
    trace.emplace_back();
    trace.back().rule = rule;
    return trace.back();
  }
  void kill(int v, TraceStep& st) {
    assert(alive[v]);
    st.removed_vertices.push_back(v);
    if (w.test(v)) {
      st.unexempted.push_back(v);
      w.reset(v);
    }
    for (int u : adj[v]) {
      st.removed_edges.push_back({v, u});
      adj[u].erase(v);
    }
    adj[v].clear();
    alive[v] = 0;
  }
  void exempt(int v, TraceStep& st) {
    if (!w.test(v)) {
      w.set(v);
      st.exempted.push_back(v);
    }
  }
  void drop_edge(int a, int b, TraceStep& st) {
    st.removed_edges.push_back({a, b});
    adj[a].erase(b);
    adj[b].erase(a);
  }
  void add_edge(int a, int b, TraceStep& st) {
    if (adj[a].count(b)) return;
    st.added_edges.push_back({a, b});
    adj[a].insert(b);
    adj[b].insert(a);
  }
  void force(int v, TraceStep& st) {
    st.solution.push_back(v);
    forced.set(v);
  }
};

Reduced export_reduced(Workspace& ws) {
  Reduced r;
  std::vector<int> from(ws.n, -1);
  for (int v = 0; v < ws.n; ++v) {
    if (!ws.alive[v]) continue;
    from[v] = static_cast<int>(r.to_original.size());
    r.to_original.push_back(v);
  }
  const int cn = static_cast<int>(r.to_original.size());
  Graph cg(cn);
  for (int v = 0; v < ws.n; ++v) {
    if (!ws.alive[v]) continue;
    for (int u : ws.adj[v])
      if (u > v) cg.add_edge(from[v], from[u]);
  }
  VertexSet cw(cn);
  for (int i = 0; i < cn; ++i)
    if (ws.w.test(r.to_original[i])) cw.set(i);
  r.inst = {std::move(cg), std::move(cw)};
  r.solution = ws.forced;
  r.delta = ws.delta;
  r.trace = std::move(ws.trace);
  return r;
}

// One reduction at a degree <= 1 vertex. Returns the vertex where a pendant
// chain would continue, or -1.
int reduce_at_leaf(Workspace& ws, int v) {
  assert(ws.alive[v] && ws.deg(v) <= 1);
  if (ws.deg(v) == 0) {
    if (ws.w.test(v)) {
      ws.kill(v, ws.step("drop-exempt-isolated"));
    } else {
      TraceStep& st = ws.step("force-isolated");
      ws.force(v, st);
      ws.kill(v, st);
    }
    return -1;
  }
  int u = *ws.adj[v].begin();
  if (ws.w.test(v)) {
    ws.kill(v, ws.step("drop-exempt-leaf"));
    return u;
  }
  TraceStep& st = ws.step("force-leaf-neighbor");
  ws.force(u, st);
  int next = -1;
  if (ws.deg(u) == 2)
    for (int x : ws.adj[u])
      if (x != v) next = x;
  for (int x : ws.adj[u])
    if (x != v) ws.exempt(x, st);
  ws.kill(v, st);
  ws.kill(u, st);
  return next;
}

void consume_dangling(Workspace& ws, int leaf) {
  int x = leaf;
  while (x != -1 && ws.alive[x] && ws.deg(x) <= 1) x = reduce_at_leaf(ws, x);
}

// Cyclic order of a component in which every vertex has degree 2.
std::vector<int> cycle_order(const Workspace& ws, int s) {
  std::vector<int> cyc{s};
  int prev = s, cur = *ws.adj[s].begin();
  while (cur != s) {
    cyc.push_back(cur);
    for (int nb : ws.adj[cur]) {
      if (nb != prev) {
        prev = cur;
        cur = nb;
        break;
      }
    }
  }
  return cyc;
}

void solve_cycle_component(Workspace& ws, const std::vector<int>& cyc) {
  const int m = static_cast<int>(cyc.size());
  Graph c(m);
  for (int i = 0; i < m; ++i) c.add_edge(i, (i + 1) % m);
  VertexSet lw(m);
  int t = -1;
  for (int i = 0; i < m; ++i) {
    if (ws.w.test(cyc[i]))
      lw.set(i);
    else if (t == -1)
      t = i;
  }
  assert(t != -1);  // adjacent exempt pairs were dropped before
  VertexSet best = rdsc_solve(c, VertexSet(m), lw, t, 1);
  for (int side : {(t + m - 1) % m, (t + 1) % m}) {
    VertexSet u2(m);
    u2.set(side);
    VertexSet w2 = lw;
    w2.reset(side);
    VertexSet cand = rdsc_solve(c, u2, w2, t, 2);
    if (cand.count() < best.count()) best = cand;
  }
  TraceStep& st = ws.step("solve-cycle-component");
  for (int i = 0; i < m; ++i)
    if (best.test(i)) ws.force(cyc[i], st);
  for (int v : cyc) ws.kill(v, st);
}

// First matching flat rule; returns false once none applies.
bool flat_pass(Workspace& ws) {
  for (int v = 0; v < ws.n; ++v) {
    if (ws.alive[v] && ws.deg(v) <= 1) {
      consume_dangling(ws, v);
      return true;
    }
  }
  for (int v = 0; v < ws.n; ++v) {
    if (!ws.alive[v] || !ws.w.test(v)) continue;
    for (int u : ws.adj[v]) {
      if (u > v && ws.w.test(u)) {
        ws.drop_edge(v, u, ws.step("drop-exempt-edge"));
        if (ws.deg(v) <= 1) consume_dangling(ws, v);
        if (ws.alive[u] && ws.deg(u) <= 1) consume_dangling(ws, u);
        return true;
      }
    }
  }
  std::vector<char> seen(ws.n, 0);
  for (int v = 0; v < ws.n; ++v) {
    if (!ws.alive[v] || seen[v]) continue;
    std::vector<int> bfs{v};
    seen[v] = 1;
    bool cyclic = true;
    for (size_t i = 0; i < bfs.size(); ++i) {
      int x = bfs[i];
      if (ws.deg(x) != 2) cyclic = false;
      for (int u : ws.adj[x]) {
        if (!seen[u]) {
          seen[u] = 1;
          bfs.push_back(u);
        }
      }
    }
    if (cyclic) {
      solve_cycle_component(ws, cycle_order(ws, v));
      return true;
    }
  }
  return false;
}

void flat_fixpoint(Workspace& ws) {
  while (flat_pass(ws)) {
  }
}

// Maximal paths whose interior vertices all have degree 2, listed from each
// anchor (degree != 2) in ascending order. A closed walk that leaves and
// re-enters the same anchor appears once.
std::vector<std::vector<int>> maximal_paths(const Workspace& ws) {
  std::vector<std::vector<int>> out;
  std::set<std::pair<int, int>> used;
  auto key = [](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
  for (int a = 0; a < ws.n; ++a) {
    if (!ws.alive[a] || ws.deg(a) == 2) continue;
    for (int nb : ws.adj[a]) {
      if (used.count(key(a, nb))) continue;
      std::vector<int> seq{a, nb};
      used.insert(key(a, nb));
      int prev = a, cur = nb;
      while (ws.deg(cur) == 2) {
        int nx = -1;
        for (int x : ws.adj[cur])
          if (x != prev) nx = x;
        used.insert(key(cur, nx));
        seq.push_back(nx);
        prev = cur;
        cur = nx;
      }
      out.push_back(std::move(seq));
    }
  }
  return out;
}

void apply_wfree(Workspace& ws, const std::array<int, 5>& seg) {
  TraceStep& st = ws.step("contract-plain-run");
  st.segment.assign(seg.begin(), seg.end());
  st.delta = 1;
  ws.kill(seg[1], st);
  ws.kill(seg[2], st);
  ws.kill(seg[3], st);
  ws.add_edge(seg[0], seg[4], st);
  ws.delta += 1;
}

void apply_gap11(Workspace& ws, const std::array<int, 5>& seg) {
  TraceStep& st = ws.step("exempt-gap-1-1");
  st.segment.assign(seg.begin(), seg.end());
  ws.kill(seg[2], st);
  ws.add_edge(seg[1], seg[3], st);
}

void apply_gap22(Workspace& ws, const std::array<int, 7>& seg) {
  TraceStep& st = ws.step("exempt-gap-2-2");
  st.segment.assign(seg.begin(), seg.end());
  st.delta = 1;
  ws.kill(seg[2], st);
  ws.kill(seg[3], st);
  ws.kill(seg[4], st);
  ws.add_edge(seg[1], seg[5], st);
  ws.delta += 1;
}

void apply_gap21(Workspace& ws, const std::array<int, 6>& seg) {
  TraceStep& st = ws.step("exempt-gap-2-1");
  st.segment.assign(seg.begin(), seg.end());
  st.delta = 1;
  ws.kill(seg[2], st);
  ws.kill(seg[3], st);
  ws.kill(seg[4], st);
  ws.add_edge(seg[1], seg[5], st);
  ws.delta += 1;
}

// One rewrite on a maximal path of more than 9 edges. Adjacent exempt pairs
// go first, then plain runs of three, then a squeeze between three
// consecutive interior exempt vertices (gaps are 1 or 2 at this point).
bool rewrite_long_path(Workspace& ws, const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  if (len - 1 <= 9) return false;
  for (int i = 0; i + 1 < len; ++i) {
    int a = seq[i], b = seq[i + 1];
    if (ws.w.test(a) && ws.w.test(b)) {
      ws.drop_edge(a, b, ws.step("drop-exempt-edge"));
      if (ws.deg(a) <= 1) consume_dangling(ws, a);
      if (ws.alive[b] && ws.deg(b) <= 1) consume_dangling(ws, b);
      return true;
    }
  }
  for (int i = 1; i + 2 <= len - 2; ++i) {
    if (!ws.w.test(seq[i]) && !ws.w.test(seq[i + 1]) && !ws.w.test(seq[i + 2])) {
      apply_wfree(ws, {seq[i - 1], seq[i], seq[i + 1], seq[i + 2], seq[i + 3]});
      return true;
    }
  }
  std::vector<int> wpos;
  for (int i = 1; i + 1 < len; ++i)
    if (ws.w.test(seq[i])) wpos.push_back(i);
  assert(wpos.size() >= 3);
  const int p1 = wpos[0], p2 = wpos[1], p3 = wpos[2];
  const int g1 = p2 - p1 - 1, g2 = p3 - p2 - 1;
  assert(g1 >= 1 && g1 <= 2 && g2 >= 1 && g2 <= 2);
  if (g1 == 1 && g2 == 1) {
    apply_gap11(ws, {seq[p1], seq[p1 + 1], seq[p2], seq[p2 + 1], seq[p3]});
  } else if (g1 == 2 && g2 == 2) {
    apply_gap22(ws, {seq[p1], seq[p1 + 1], seq[p1 + 2], seq[p2], seq[p2 + 1], seq[p2 + 2],
                     seq[p3]});
  } else if (g1 == 2 && g2 == 1) {
    apply_gap21(ws, {seq[p1], seq[p1 + 1], seq[p1 + 2], seq[p2], seq[p2 + 1], seq[p3]});
  } else {
    // mirror of the 2,1 pattern
    apply_gap21(ws, {seq[p3], seq[p3 - 1], seq[p3 - 2], seq[p2], seq[p1 + 1], seq[p1]});
  }
  return true;
}

void long_path_loop(Workspace& ws, bool with_flat) {
  while (true) {
    if (with_flat) flat_fixpoint(ws);
    bool acted = false;
    for (const std::vector<int>& seq : maximal_paths(ws)) {
      if (static_cast<int>(seq.size()) - 1 > 9) {
        acted = rewrite_long_path(ws, seq);
        assert(acted);
        break;
      }
    }
    if (!acted) break;
  }
}

CactusTree cactus_tree_from_blocks(const Graph& h, int root) {
  std::vector<std::vector<int>> blocks = biconnected_components(h);
  std::vector<std::vector<int>> cycles;
  std::vector<std::pair<int, int>> bridges;
  std::vector<char> in_cycle(h.n(), 0);
  for (const std::vector<int>& blk : blocks) {
    if (blk.size() == 1) {
      bridges.push_back(h.edges()[blk[0]]);
      continue;
    }
    std::map<int, std::vector<int>> badj;
    for (int ei : blk) {
      auto [a, b] = h.edges()[ei];
      badj[a].push_back(b);
      badj[b].push_back(a);
    }
    const int start = badj.begin()->first;
    std::vector<int> cyc;
    int prev = -1, cur = start;
    while (true) {
      cyc.push_back(cur);
      in_cycle[cur] = 1;
      const std::vector<int>& nb = badj[cur];
      assert(nb.size() == 2);
      int nx = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nx;
      if (cur == start) break;
    }
    cycles.push_back(std::move(cyc));
  }
  for (int v = 0; v < h.n(); ++v)
    if (!in_cycle[v]) cycles.push_back({v});
  return build_cactus_tree(cycles, bridges, root);
}

// Postorder domination of one cactus tree. In dangling mode the root may be
// left exposed; in full mode the whole cactus is dominated. The result
// contains the root whenever some minimum partial solution does.
VertexSet cactus_postorder_dominate(const Graph& h, const CactusTree& tree, bool full_root) {
  const int n = h.n();
  VertexSet s(n), dom(n);
  auto add = [&](int v) {
    if (s.test(v)) return;
    s.set(v);
    dom.set(v);
    for (int u : h.neighbors(v)) dom.set(u);
  };
  auto apply = [&](const std::vector<int>& cyc, const VertexSet& sol) {
    sol.for_each([&](int i) { add(cyc[i]); });
  };

  for (int ni : tree.postorder) {
    const CactusNode& node = tree.nodes[ni];
    const bool is_root = node.parent == -1;
    if (node.cycle.size() == 1) {
      int v = node.cycle[0];
      if (dom.test(v)) continue;
      if (!is_root) {
        assert(node.edge_attached);
        add(node.parent_contact);
      } else if (full_root) {
        add(v);
      }
      continue;
    }
    bool all_done = true;
    for (int x : node.cycle)
      if (!dom.test(x)) all_done = false;
    if (all_done) continue;

    const std::vector<int>& cyc = node.cycle;
    const int m = static_cast<int>(cyc.size());
    Graph c(m);
    for (int i = 0; i < m; ++i) c.add_edge(i, (i + 1) % m);
    VertexSet lu(m), lw(m);
    int tpos = -1;
    for (int i = 0; i < m; ++i) {
      if (cyc[i] == node.articulation) tpos = i;
      if (s.test(cyc[i]))
        lu.set(i);
      else if (dom.test(cyc[i]))
        lw.set(i);
    }
    assert(tpos != -1);
    if (lu.test(tpos)) {
      apply(cyc, rdsc_solve(c, lu, lw, tpos, 1));
      continue;
    }
    VertexSet s1 = rdsc_solve(c, lu, lw, tpos, 1);
    if (is_root && full_root && !lw.test(tpos)) {
      // the root has no parent to fall back on: dominate it here, either
      // directly or from one of its two cycle neighbours
      VertexSet best = s1;
      for (int side : {(tpos + m - 1) % m, (tpos + 1) % m}) {
        VertexSet u2 = lu;
        u2.set(side);
        VertexSet w2 = lw;
        w2.reset(side);
        VertexSet cand = rdsc_solve(c, u2, w2, tpos, 2);
        if (cand.count() < best.count()) best = cand;
      }
      apply(cyc, best);
      continue;
    }
    VertexSet s2 = rdsc_solve(c, lu, lw, tpos, 2);
    if (s2.count() < s1.count()) {
      apply(cyc, s2);
      // the articulation may still be exposed; across a bridge the parent
      // side has to stand in for it
      if (!is_root && node.edge_attached && !dom.test(node.articulation))
        add(node.parent_contact);
    } else {
      apply(cyc, s1);
    }
  }
  for (const CactusNode& node : tree.nodes)
    for (int x : node.cycle)
      if (full_root || x != tree.root_vertex) assert(dom.test(x));
  return s;
}

}  // namespace

CactusTree build_cactus_tree(const std::vector<std::vector<int>>& cycles,
                             const std::vector<std::pair<int, int>>& bridges,
                             int root_vertex) {
  CactusTree tree;
  tree.root_vertex = root_vertex;
  for (const std::vector<int>& cyc : cycles) {
    assert(!cyc.empty() && cyc.size() != 2);
    CactusNode node;
    node.cycle = cyc;
    tree.nodes.push_back(std::move(node));
  }
  std::map<int, std::vector<int>> holding;
  for (size_t i = 0; i < tree.nodes.size(); ++i)
    for (int x : tree.nodes[i].cycle) holding[x].push_back(static_cast<int>(i));
  if (holding.find(root_vertex) == holding.end()) {
    CactusNode bare;
    bare.cycle = {root_vertex};
    holding[root_vertex].push_back(static_cast<int>(tree.nodes.size()));
    tree.nodes.push_back(std::move(bare));
  }

  std::set<std::pair<int, int>> links;
  auto link = [&](int a, int b) {
    if (a == b) return;
    links.insert({std::min(a, b), std::max(a, b)});
  };
  for (const auto& [x, ids] : holding)
    for (size_t i = 0; i + 1 < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) link(ids[i], ids[j]);
  for (auto [x, y] : bridges) {
    assert(holding.count(x) && holding.count(y));
    link(holding[x].front(), holding[y].front());
  }
  std::vector<std::vector<int>> nadj(tree.nodes.size());
  for (auto [a, b] : links) {
    nadj[a].push_back(b);
    nadj[b].push_back(a);
  }

  tree.root = holding[root_vertex].front();
  std::vector<int> bfs{tree.root};
  std::vector<char> seen(tree.nodes.size(), 0);
  seen[tree.root] = 1;
  tree.nodes[tree.root].articulation = root_vertex;
  for (size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (int u : nadj[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      tree.nodes[u].parent = v;
      tree.nodes[v].children.push_back(u);
      bfs.push_back(u);
    }
  }
  for (char sflag : seen) assert(sflag);

  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    CactusNode& node = tree.nodes[i];
    if (node.parent == -1) continue;
    const CactusNode& par = tree.nodes[node.parent];
    std::set<int> pset(par.cycle.begin(), par.cycle.end());
    int shared = -1;
    for (int x : node.cycle) {
      if (pset.count(x)) {
        assert(shared == -1);  // two blocks of a cactus meet in one vertex
        shared = x;
      }
    }
    if (shared != -1) {
      node.articulation = shared;
      continue;
    }
    std::set<int> mset(node.cycle.begin(), node.cycle.end());
    for (auto [x, y] : bridges) {
      if (mset.count(x) && pset.count(y)) {
        node.articulation = x;
        node.parent_contact = y;
      } else if (mset.count(y) && pset.count(x)) {
        node.articulation = y;
        node.parent_contact = x;
      }
    }
    assert(node.articulation != -1);
    node.edge_attached = true;
  }

  std::vector<std::pair<int, bool>> stack{{tree.root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      tree.postorder.push_back(v);
      continue;
    }
    stack.push_back({v, true});
    for (auto it = tree.nodes[v].children.rbegin(); it != tree.nodes[v].children.rend(); ++it)
      stack.push_back({*it, false});
  }
  assert(tree.postorder.size() == tree.nodes.size());
  return tree;
}

Reduced leaf_reduce(const RdsInstance& inst, int v) {
  Workspace ws = Workspace::from(inst);
  if (v < 0 || v >= ws.n) throw InputError("vertex out of range");
  if (ws.deg(v) > 1) throw InputError("vertex is not isolated or a leaf");
  reduce_at_leaf(ws, v);
  return export_reduced(ws);
}

Reduced dangling_path_reduce(const RdsInstance& inst, int leaf) {
  Workspace ws = Workspace::from(inst);
  if (leaf < 0 || leaf >= ws.n) throw InputError("vertex out of range");
  if (ws.deg(leaf) != 1) throw InputError("vertex is not a leaf");
  consume_dangling(ws, leaf);
  return export_reduced(ws);
}

VertexSet path_dominate(const RdsInstance& inst) {
  check_instance(inst);
  const int n = inst.g.n();
  if (n == 0) return VertexSet(0);
  if (inst.g.m() != n - 1) throw InputError("input graph is not a path");
  for (int v = 0; v < n; ++v)
    if (inst.g.degree(v) > 2) throw InputError("input graph is not a path");
  if (component_count(inst.g) != 1) throw InputError("input graph is not a path");

  std::vector<int> order;
  order.reserve(n);
  if (n == 1) {
    order.push_back(0);
  } else {
    int s = 0;
    while (inst.g.degree(s) != 1) ++s;
    order.push_back(s);
    int prev = -1, cur = s;
    while (static_cast<int>(order.size()) < n) {
      for (int u : inst.g.neighbors(cur)) {
        if (u != prev) {
          order.push_back(u);
          prev = cur;
          cur = u;
          break;
        }
      }
    }
  }

  VertexSet s(n);
  std::vector<char> dom(n, 0);
  auto take = [&](int v) {
    s.set(v);
    dom[v] = 1;
    for (int u : inst.g.neighbors(v)) dom[u] = 1;
  };
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (inst.w.test(v) || dom[v]) continue;
    take(i + 1 < n ? order[i + 1] : v);
  }
  assert(is_dominating(inst.g, s, VertexSet::full(n) - inst.w));
  return s;
}

VertexSet rdsc_solve(const Graph& c, const VertexSet& u, const VertexSet& w, int t,
                     int which_case) {
  const int n = c.n();
  if (u.universe() != n || w.universe() != n)
    throw InputError("set universe does not match the graph");
  if (c.has_parallel_edges()) throw InputError("cycle solver requires a simple graph");
  if (n == 0) throw InputError("cycle solver needs a nonempty graph");
  if (t < 0 || t >= n) throw InputError("pivot out of range");
  if (which_case != 1 && which_case != 2) throw InputError("case must be 1 or 2");
  if (u.intersects(w)) throw InputError("forced and exempt sets overlap");
  for (int v = 0; v < n; ++v)
    if (c.degree(v) > 2) throw InputError("cycle solver needs degrees at most 2");
  if (component_count(c) != 1) throw InputError("cycle solver needs a connected graph");
  if (which_case == 2 && u.test(t)) throw InputError("case 2 forbids the pivot");

  VertexSet uu = u, ww = w;
  if (which_case == 1) {
    uu.set(t);
    ww.reset(t);
  } else {
    ww.set(t);
  }
  uu.for_each([&](int v) {
    for (int x : c.neighbors(v)) ww.set(x);
  });
  ww -= uu;

  // drop everything that is settled: forced vertices and any edge running
  // between covered endpoints
  VertexSet cover = uu | ww;
  VertexSet x = uu;
  if (which_case == 2) x.set(t);
  for (auto [a, b] : c.edges())
    if (cover.test(a) && cover.test(b)) {
      x.set(a);
      x.set(b);
    }

  VertexSet s = uu;
  std::vector<int> from(n, -1);
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (x.test(v) || seen[v]) continue;
    std::vector<int> mem{v};
    seen[v] = 1;
    for (size_t i = 0; i < mem.size(); ++i)
      for (int nb : c.neighbors(mem[i]))
        if (!x.test(nb) && !seen[nb]) {
          seen[nb] = 1;
          mem.push_back(nb);
        }
    std::sort(mem.begin(), mem.end());
    const int pn = static_cast<int>(mem.size());
    for (int i = 0; i < pn; ++i) from[mem[i]] = i;
    Graph pg(pn);
    for (int a : mem)
      for (int nb : c.neighbors(a))
        if (!x.test(nb) && nb > a) pg.add_edge(from[a], from[nb]);
    VertexSet pw(pn);
    for (int i = 0; i < pn; ++i)
      if (ww.test(mem[i])) pw.set(i);
    VertexSet ps = path_dominate({std::move(pg), std::move(pw)});
    ps.for_each([&](int i) { s.set(mem[i]); });
  }

  VertexSet targets = VertexSet::full(n) - w;
  if (which_case == 2) {
    targets.reset(t);
    assert(!s.test(t));
  }
  assert(is_dominating(c, s, targets));
  return s;
}

Reduced wfree_path_reduce(const RdsInstance& inst, const std::array<int, 5>& segment) {
  Workspace ws = Workspace::from(inst);
  std::set<int> distinct(segment.begin(), segment.end());
  if (distinct.size() != segment.size()) throw InputError("segment repeats a vertex");
  for (int v : segment)
    if (v < 0 || v >= ws.n) throw InputError("segment vertex out of range");
  for (size_t i = 0; i + 1 < segment.size(); ++i)
    if (!ws.adj[segment[i]].count(segment[i + 1]))
      throw InputError("segment is not a path in the graph");
  for (int i : {1, 2, 3})
    if (ws.w.test(segment[i]) || ws.deg(segment[i]) != 2)
      throw InputError("segment interior must be plain degree-2 vertices");
  apply_wfree(ws, segment);
  return export_reduced(ws);
}

Reduced induced_path_reduce(const RdsInstance& inst) {
  Workspace ws = Workspace::from(inst);
  long_path_loop(ws, false);
  return export_reduced(ws);
}

VertexSet dominate_dangling_cactus(const Graph& h, int root) {
  if (h.has_parallel_edges()) throw InputError("cactus domination requires a simple graph");
  if (root < 0 || root >= h.n()) throw InputError("root out of range");
  if (component_count(h) != 1) throw InputError("cactus domination requires a connected graph");
  if (!is_cactus(h)) throw InputError("input graph is not a cactus");
  return cactus_postorder_dominate(h, cactus_tree_from_blocks(h, root), false);
}

Reduced compress(const Graph& g_in) {
  const Graph g = g_in.has_parallel_edges() ? g_in.simplified() : g_in;
  const int n = g.n();
  CactusKernelDecomposition ck = cactus_kernel(g);

  Workspace ws;
  ws.n = n;
  ws.adj.resize(n);
  ws.alive.assign(n, 0);
  ws.w = VertexSet(n);
  ws.forced = VertexSet(n);
  for (const std::vector<int>& path : ck.elim.kernel_paths) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      ws.alive[path[i]] = ws.alive[path[i + 1]] = 1;
      ws.adj[path[i]].insert(path[i + 1]);
      ws.adj[path[i + 1]].insert(path[i]);
    }
  }

  // everything off the kernel paths forms the cactus forest
  Graph gc(n);
  for (auto [a, b] : g.edges())
    if (!ws.adj[a].count(b)) gc.add_edge(a, b);

  for (const CactusTree& tree : ck.cacti) {
    const int root = tree.root_vertex;
    const bool full = !ws.alive[root];
    VertexSet sh = cactus_postorder_dominate(gc, tree, full);

    std::vector<int> members;
    for (const CactusNode& node : tree.nodes)
      for (int x : node.cycle) members.push_back(x);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    TraceStep& st = ws.step(full ? "cactus-component" : "cactus");
    sh.for_each([&](int v) { ws.force(v, st); });
    for (int v : members)
      if (full || v != root) st.removed_vertices.push_back(v);
    for (int v : members)
      for (int u : gc.neighbors(v))
        if (u > v) st.removed_edges.push_back({v, u});
    if (!full) {
      if (sh.test(root)) {
        for (int u : ws.adj[root]) ws.exempt(u, st);
        ws.kill(root, st);
      } else {
        bool covered = false;
        for (int u : gc.neighbors(root))
          if (sh.test(u)) covered = true;
        if (covered) ws.exempt(root, st);
      }
    }
  }

  long_path_loop(ws, true);

  int alive_cnt = 0, edge_cnt = 0, deep = 0;
  for (int v = 0; v < n; ++v) {
    if (!ws.alive[v]) continue;
    ++alive_cnt;
    edge_cnt += ws.deg(v);
    if (ws.deg(v) > 2) ++deep;
    assert(ws.deg(v) >= 2);
  }
  edge_cnt /= 2;
  assert(alive_cnt <= 26 * ck.k);
  assert(edge_cnt <= 27 * ck.k);
  assert(deep <= 2 * ck.k);
  for (const std::vector<int>& seq : maximal_paths(ws))
    assert(static_cast<int>(seq.size()) - 1 <= 9);

  return export_reduced(ws);
}

VertexSet lift_solution(const RdsInstance& original, const Reduced& r,
                        const VertexSet& reduced_solution) {
  check_instance(original);
  const int n = original.g.n();
  if (reduced_solution.universe() != r.inst.g.n())
    throw InputError("solution universe does not match the reduced instance");
  if (!is_dominating(r.inst.g, reduced_solution,
                     VertexSet::full(r.inst.g.n()) - r.inst.w))
    throw InputError("solution does not dominate the reduced instance");

  std::vector<std::set<int>> adj(n);
  VertexSet w(n), cur(n);
  for (auto [a, b] : r.inst.g.edges()) {
    int oa = r.to_original[a], ob = r.to_original[b];
    adj[oa].insert(ob);
    adj[ob].insert(oa);
  }
  r.inst.w.for_each([&](int v) { w.set(r.to_original[v]); });
  reduced_solution.for_each([&](int v) { cur.set(r.to_original[v]); });

  auto covered = [&](int v) {
    if (cur.test(v)) return true;
    for (int u : adj[v])
      if (cur.test(u)) return true;
    return false;
  };
  auto needs = [&](int v) { return !w.test(v) && !covered(v); };

  for (auto it = r.trace.rbegin(); it != r.trace.rend(); ++it) {
    const TraceStep& st = *it;
    for (auto [a, b] : st.added_edges) {
      adj[a].erase(b);
      adj[b].erase(a);
    }
    for (auto [a, b] : st.removed_edges) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
    for (int v : st.exempted) w.reset(v);
    for (int v : st.unexempted) w.set(v);
    for (int v : st.solution) cur.set(v);

    const std::vector<int>& sg = st.segment;
    if (st.rule == "contract-plain-run") {
      if (needs(sg[0]))
        cur.set(sg[1]);
      else if (needs(sg[4]))
        cur.set(sg[3]);
      else
        cur.set(sg[2]);
    } else if (st.rule == "exempt-gap-1-1") {
      if (needs(sg[3])) {
        assert(cur.test(sg[1]));
        cur.reset(sg[1]);
        cur.set(sg[2]);
      } else if (needs(sg[1])) {
        assert(cur.test(sg[3]));
        cur.reset(sg[3]);
        cur.set(sg[2]);
      }
    } else if (st.rule == "exempt-gap-2-2") {
      if (cur.test(sg[1]))
        cur.set(sg[4]);
      else if (cur.test(sg[5]))
        cur.set(sg[2]);
      else {
        assert(cur.test(sg[0]) && cur.test(sg[6]));
        cur.set(sg[3]);
      }
    } else if (st.rule == "exempt-gap-2-1") {
      if (cur.test(sg[1]))
        cur.set(sg[4]);
      else if (cur.test(sg[0]))
        cur.set(sg[3]);
      else {
        assert(cur.test(sg[5]));
        cur.set(sg[2]);
      }
    }
  }

  assert(is_dominating(original.g, cur, VertexSet::full(n) - original.w));
  return cur;
}

OracleResult rds_brute(const RdsInstance& inst) {
  check_instance(inst);
  const int n = inst.g.n();
  if (n > 22)
    throw ResourceError("restricted domination on " + std::to_string(n) +
                        " vertices exceeds the cap of 22");
  return brute_min_dominating(inst.g, WeightFn::unit(), VertexSet::full(n) - inst.w,
                              VertexSet(n), VertexSet(n));
}

void write_trace_jsonl(std::ostream& os, const std::vector<TraceStep>& trace) {
  auto ints = [&os](const char* key, const std::vector<int>& xs) {
    if (xs.empty()) return;
    os << ",\"" << key << "\":[";
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "]";
  };
  auto pairs = [&os](const char* key, const std::vector<std::pair<int, int>>& xs) {
    if (xs.empty()) return;
    os << ",\"" << key << "\":[";
    for (size_t i = 0; i < xs.size(); ++i)
      os << (i ? "," : "") << "[" << xs[i].first << "," << xs[i].second << "]";
    os << "]";
  };
  for (const TraceStep& st : trace) {
    os << "{\"rule\":\"" << st.rule << "\"";
    ints("removed_vertices", st.removed_vertices);
    pairs("removed_edges", st.removed_edges);
    pairs("added_edges", st.added_edges);
    ints("solution", st.solution);
    ints("exempted", st.exempted);
    ints("unexempted", st.unexempted);
    ints("segment", st.segment);
    if (st.delta != 0) os << ",\"delta\":" << st.delta;
    os << "}\n";
  }
}

}  // namespace domsetkit
