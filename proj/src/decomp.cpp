#include "domsetkit/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "domsetkit/errors.hpp"

namespace domsetkit {

int RawDecomposition::width() const {
  int mx = 0;
  for (const auto& b : bags) mx = std::max(mx, b.count());
  return mx - 1;
}

std::vector<ValidationIssue> verify_decomposition(const RawDecomposition& td, const Graph& g) {
  std::vector<ValidationIssue> issues;
  auto add = [&](const std::string& axiom, const std::string& detail) {
    issues.push_back({axiom, detail});
  };
  if (td.bags.empty()) {
    add("tree", "decomposition has no nodes");
    return issues;
  }
  if (td.n != g.n()) {
    add("universe", "decomposition n does not match graph");
    return issues;
  }
  int b = static_cast<int>(td.bags.size());
  for (const auto& bag : td.bags)
    if (bag.universe() != g.n()) {
      add("universe", "bag universe does not match graph");
      return issues;
    }
  for (auto [x, y] : td.tree_edges)
    if (x < 0 || x >= b || y < 0 || y >= b) {
      add("tree", "tree edge endpoint out of range");
      return issues;
    }
  // Tree shape: b-1 edges and connected.
  if (static_cast<int>(td.tree_edges.size()) != b - 1)
    add("tree", "expected " + std::to_string(b - 1) + " tree edges, got " +
                    std::to_string(td.tree_edges.size()));
  std::vector<int> uf(b);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto [x, y] : td.tree_edges) {
    int rx = find(x), ry = find(y);
    if (rx == ry)
      add("tree", "tree edges contain a cycle");
    else
      uf[rx] = ry;
  }
  for (int i = 1; i < b; ++i)
    if (find(i) != find(0)) {
      add("tree", "decomposition tree is disconnected");
      break;
    }
  // Vertex coverage.
  VertexSet seen(g.n());
  for (const auto& bag : td.bags) seen |= bag;
  for (int v = 0; v < g.n(); ++v)
    if (!seen.test(v)) {
      add("vertex-coverage", "vertex " + std::to_string(v + 1) + " appears in no bag");
      break;
    }
  // Edge coverage.
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : td.bags)
      if (bag.test(u) && bag.test(v)) {
        covered = true;
        break;
      }
    if (!covered) {
      add("edge-coverage", "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                               "} is in no bag");
      break;
    }
  }
  // Connected occurrence subtree per vertex.
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (int v = 0; v < g.n(); ++v) {
    int start = -1, total = 0;
    for (int i = 0; i < b; ++i)
      if (td.bags[i].test(v)) {
        if (start < 0) start = i;
        ++total;
      }
    if (start < 0) continue;
    std::vector<char> vis(b, 0);
    std::vector<int> stack = {start};
    vis[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!vis[y] && td.bags[y].test(v)) {
          vis[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != total) {
      add("occurrence-connectivity",
          "bags containing vertex " + std::to_string(v + 1) + " are disconnected");
      break;
    }
  }
  return issues;
}

std::vector<ValidationIssue> verify_nice(const NiceTreeDecomposition& td, const Graph& g) {
  std::vector<ValidationIssue> issues;
  auto add = [&](const std::string& axiom, const std::string& detail) {
    issues.push_back({axiom, detail});
  };
  if (td.nodes.empty()) {
    add("tree", "no nodes");
    return issues;
  }
  RawDecomposition raw;
  raw.n = td.n;
  int width = -1;
  for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i) {
    const NiceNode& nd = td.nodes[i];
    raw.bags.push_back(nd.bag);
    width = std::max(width, nd.bag.count() - 1);
    for (int c : {nd.child, nd.child2}) {
      if (c < 0) continue;
      if (c >= i) {
        add("order", "child index not before parent");
        return issues;
      }
      raw.tree_edges.emplace_back(c, i);
    }
    switch (nd.type) {
      case NodeType::Leaf:
        if (nd.child >= 0 || nd.child2 >= 0) add("nice-leaf", "leaf with a child");
        if (nd.bag.any()) add("nice-leaf", "leaf bag not empty");
        break;
      case NodeType::Introduce: {
        if (nd.child < 0 || nd.child2 >= 0) add("nice-introduce", "needs exactly one child");
        else {
          VertexSet expect = td.nodes[nd.child].bag;
          if (nd.vertex < 0 || nd.vertex >= td.n || expect.test(nd.vertex))
            add("nice-introduce", "introduced vertex invalid or already present");
          else {
            expect.set(nd.vertex);
            if (!(expect == nd.bag)) add("nice-introduce", "bag != child bag + vertex");
          }
        }
        break;
      }
      case NodeType::Forget: {
        if (nd.child < 0 || nd.child2 >= 0) add("nice-forget", "needs exactly one child");
        else {
          VertexSet expect = td.nodes[nd.child].bag;
          if (nd.vertex < 0 || nd.vertex >= td.n || !expect.test(nd.vertex))
            add("nice-forget", "forgotten vertex invalid or absent from child bag");
          else {
            expect.reset(nd.vertex);
            if (!(expect == nd.bag)) add("nice-forget", "bag != child bag - vertex");
          }
        }
        break;
      }
      case NodeType::Join:
        if (nd.child < 0 || nd.child2 < 0) add("nice-join", "needs two children");
        else if (!(td.nodes[nd.child].bag == nd.bag) || !(td.nodes[nd.child2].bag == nd.bag))
          add("nice-join", "children bags differ from join bag");
        break;
    }
  }
  if (td.nodes.back().bag.any()) add("nice-root", "root bag not empty");
  if (width != td.width) add("width", "stored width does not match bags");
  auto base = verify_decomposition(raw, g);
  issues.insert(issues.end(), base.begin(), base.end());
  return issues;
}

namespace {

struct NiceBuilder {
  NiceTreeDecomposition td;

  int push(NodeType t, int vertex, VertexSet bag, int c1, int c2) {
    td.nodes.push_back({t, vertex, std::move(bag), c1, c2});
    return static_cast<int>(td.nodes.size()) - 1;
  }

  // Leaf chain introducing `bag` one vertex at a time, ascending.
  int leaf_chain(const VertexSet& bag) {
    int cur = push(NodeType::Leaf, -1, VertexSet(td.n), -1, -1);
    VertexSet acc(td.n);
    bag.for_each([&](int v) {
      acc.set(v);
      cur = push(NodeType::Introduce, v, acc, cur, -1);
    });
    return cur;
  }

  // Forget (from - to), then introduce (to - from), ascending each.
  int lift(int from_idx, const VertexSet& from, const VertexSet& to) {
    int cur = from_idx;
    VertexSet acc = from;
    (from - to).for_each([&](int v) {
      acc.reset(v);
      cur = push(NodeType::Forget, v, acc, cur, -1);
    });
    (to - from).for_each([&](int v) {
      acc.set(v);
      cur = push(NodeType::Introduce, v, acc, cur, -1);
    });
    return cur;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const RawDecomposition& raw, const Graph& g) {
  auto issues = verify_decomposition(raw, g);
  if (!issues.empty())
    throw ValidationError("invalid tree decomposition: " + issues[0].axiom + ": " +
                          issues[0].detail);
  int b = static_cast<int>(raw.bags.size());
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : raw.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // BFS order from node 0; reverse gives children-before-parent.
  std::vector<int> parent(b, -1), order;
  order.reserve(b);
  order.push_back(0);
  parent[0] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : adj[x])
      if (parent[y] < 0) {
        parent[y] = x;
        order.push_back(y);
      }
  }
  parent[0] = -1;

  NiceBuilder nb;
  nb.td.n = raw.n;
  std::vector<int> built(b, -1);
  for (int i = b - 1; i >= 0; --i) {
    int x = order[i];
    std::vector<int> lifted;
    for (int y : adj[x])
      if (parent[y] == x) lifted.push_back(nb.lift(built[y], raw.bags[y], raw.bags[x]));
    if (lifted.empty()) {
      built[x] = nb.leaf_chain(raw.bags[x]);
    } else {
      int acc = lifted[0];
      for (size_t j = 1; j < lifted.size(); ++j)
        acc = nb.push(NodeType::Join, -1, raw.bags[x], acc, lifted[j]);
      built[x] = acc;
    }
  }
  nb.lift(built[0], raw.bags[0], VertexSet(raw.n));
  int width = -1;
  for (const auto& node : nb.td.nodes) width = std::max(width, node.bag.count() - 1);
  nb.td.width = width;
  assert(nb.td.width == raw.width());
  return std::move(nb.td);
}

namespace {

struct Elimination {
  std::vector<int> order;
  std::vector<VertexSet> bags;  // bags[i] belongs to order[i]
};

RawDecomposition from_elimination(int n, const Elimination& elim) {
  RawDecomposition td;
  td.n = n;
  if (n == 0) {
    td.bags.push_back(VertexSet(0));
    return td;
  }
  assert(static_cast<int>(elim.order.size()) == n);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim.order[i]] = i;
  td.bags = elim.bags;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = elim.order[i];
    // Parent bag: the residual neighbor eliminated first.
    int best = -1;
    elim.bags[i].for_each([&](int u) {
      if (u == v) return;
      if (best < 0 || pos[u] < pos[best]) best = u;
    });
    if (best < 0)
      roots.push_back(i);
    else
      td.tree_edges.emplace_back(i, pos[best]);
  }
  for (size_t i = 1; i < roots.size(); ++i) td.tree_edges.emplace_back(roots[i - 1], roots[i]);
  return td;
}

Elimination eliminate_bounded(const Graph& g, int d) {
  int n = g.n();
  std::vector<VertexSet> live(n, VertexSet(n));
  for (auto [u, v] : g.edges()) {
    live[u].set(v);
    live[v].set(u);
  }
  VertexSet alive = VertexSet::full(n);
  Elimination elim;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    alive.for_each([&](int v) {
      if (pick < 0 && live[v].count() <= d) pick = v;
    });
    if (pick < 0)
      throw WidthExceededError(d, "graph has no elimination of width <= " + std::to_string(d));
    VertexSet bag = live[pick];
    bag.set(pick);
    elim.order.push_back(pick);
    elim.bags.push_back(bag);
    alive.reset(pick);
    std::vector<int> nbs = live[pick].to_vector();
    for (int u : nbs) live[u].reset(pick);
    if (static_cast<int>(nbs.size()) == 2) {
      live[nbs[0]].set(nbs[1]);
      live[nbs[1]].set(nbs[0]);
    }
  }
  return elim;
}

// Min-fill elimination; returns achieved width as max residual degree.
Elimination eliminate_min_fill(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> live(n, VertexSet(n));
  for (auto [u, v] : g.edges()) {
    live[u].set(v);
    live[v].set(u);
  }
  VertexSet alive = VertexSet::full(n);
  Elimination elim;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long long pick_fill = -1;
    int pick_deg = -1;
    alive.for_each([&](int v) {
      auto nbs = live[v].to_vector();
      long long fill = 0;
      for (size_t i = 0; i < nbs.size(); ++i)
        for (size_t j = i + 1; j < nbs.size(); ++j)
          if (!live[nbs[i]].test(nbs[j])) ++fill;
      int deg = static_cast<int>(nbs.size());
      if (pick < 0 || fill < pick_fill || (fill == pick_fill && deg < pick_deg)) {
        pick = v;
        pick_fill = fill;
        pick_deg = deg;
      }
    });
    VertexSet bag = live[pick];
    bag.set(pick);
    elim.order.push_back(pick);
    elim.bags.push_back(bag);
    alive.reset(pick);
    auto nbs = live[pick].to_vector();
    for (int u : nbs) live[u].reset(pick);
    for (size_t i = 0; i < nbs.size(); ++i)
      for (size_t j = i + 1; j < nbs.size(); ++j) {
        live[nbs[i]].set(nbs[j]);
        live[nbs[j]].set(nbs[i]);
      }
  }
  return elim;
}

// Exact minimum-width elimination order for n <= 25 via iterative deepening
// over a width limit, with simplicial reductions and a failed-state memo.
struct ExactTw {
  int n;
  std::vector<uint32_t> adj0;
  std::unordered_set<uint32_t> failed;
  int limit = 0;

  bool clique(const std::vector<uint32_t>& adj, uint32_t nb) const {
    for (uint32_t rest = nb; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if ((nb & ~adj[u] & ~(uint32_t{1} << u)) != 0) return false;
    }
    return true;
  }

  bool dfs(std::vector<uint32_t> adj, uint32_t rem, std::vector<int>& order) {
    // Forced eliminations: simplicial vertices.
    bool changed = true;
    size_t mark = order.size();
    while (changed && rem) {
      changed = false;
      for (uint32_t scan = rem; scan;) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        uint32_t nb = adj[v] & rem;
        if (!clique(adj, nb)) continue;
        if (std::popcount(nb) > limit) {
          order.resize(mark);
          return false;  // clique of size deg+1 exceeds the limit
        }
        order.push_back(v);
        rem &= ~(uint32_t{1} << v);
        changed = true;
      }
    }
    if (!rem) return true;
    if (failed.count(rem)) {
      order.resize(mark);
      return false;
    }
    for (uint32_t scan = rem; scan;) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      uint32_t nb = adj[v] & rem;
      if (std::popcount(nb) > limit) continue;
      std::vector<uint32_t> adj2 = adj;
      for (uint32_t t = nb; t;) {
        int u = std::countr_zero(t);
        t &= t - 1;
        adj2[u] |= nb & ~(uint32_t{1} << u);
      }
      order.push_back(v);
      if (dfs(std::move(adj2), rem & ~(uint32_t{1} << v), order)) return true;
      order.pop_back();
    }
    failed.insert(rem);
    order.resize(mark);
    return false;
  }

  std::vector<int> run(int lb, int ub, const std::vector<int>& fallback) {
    for (limit = lb; limit < ub; ++limit) {
      failed.clear();
      std::vector<int> order;
      uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
      if (dfs(adj0, all, order)) return order;
    }
    return fallback;
  }
};

int mmd_lower_bound(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> live(n, VertexSet(n));
  for (auto [u, v] : g.edges()) {
    live[u].set(v);
    live[v].set(u);
  }
  VertexSet alive = VertexSet::full(n);
  int lb = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1, deg = n + 1;
    alive.for_each([&](int v) {
      int dv = live[v].count();
      if (dv < deg) {
        deg = dv;
        pick = v;
      }
    });
    lb = std::max(lb, deg);
    alive.reset(pick);
    live[pick].for_each([&](int u) { live[u].reset(pick); });
  }
  return lb;
}

Elimination bags_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.n();
  std::vector<VertexSet> live(n, VertexSet(n));
  for (auto [u, v] : g.edges()) {
    live[u].set(v);
    live[v].set(u);
  }
  Elimination elim;
  elim.order = order;
  for (int v : order) {
    VertexSet bag = live[v];
    bag.set(v);
    elim.bags.push_back(bag);
    auto nbs = live[v].to_vector();
    for (int u : nbs) live[u].reset(v);
    for (size_t i = 0; i < nbs.size(); ++i)
      for (size_t j = i + 1; j < nbs.size(); ++j) {
        live[nbs[i]].set(nbs[j]);
        live[nbs[j]].set(nbs[i]);
      }
  }
  return elim;
}

}  // namespace

RawDecomposition decompose_bounded_raw(const Graph& g, int d) {
  if (d < 0) throw InputError("width bound must be nonnegative");
  if (g.has_parallel_edges()) throw InputError("decompose requires a simple graph");
  int n = g.n();
  if (d <= 2) return from_elimination(n, eliminate_bounded(g, d));
  if (n == 0) return from_elimination(0, {});
  Elimination heur = eliminate_min_fill(g);
  int heur_width = 0;
  for (const auto& b : heur.bags) heur_width = std::max(heur_width, b.count() - 1);
  if (n > 25) return from_elimination(n, heur);
  ExactTw solver;
  solver.n = n;
  solver.adj0.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    solver.adj0[u] |= uint32_t{1} << v;
    solver.adj0[v] |= uint32_t{1} << u;
  }
  auto order = solver.run(mmd_lower_bound(g), heur_width, heur.order);
  return from_elimination(n, bags_from_order(g, order));
}

NiceTreeDecomposition decompose_bounded(const Graph& g, int d) {
  return make_nice(decompose_bounded_raw(g, d), g);
}

namespace {

int partition_slack(const NiceTreeDecomposition& td, const std::vector<char>& side, int halfcap) {
  int slack = 0;
  for (const auto& node : td.nodes) {
    int c0 = 0, c1 = 0;
    node.bag.for_each([&](int v) { (side[v] ? c1 : c0)++; });
    slack = std::max(slack, std::max(c0, c1) - halfcap);
  }
  return std::max(slack, 0);
}

// Exact search: first 2-coloring whose every bag side stays <= cap.
bool exact_partition(const NiceTreeDecomposition& td, int n, int cap, std::vector<char>& side) {
  std::vector<std::vector<int>> bags_of(n);
  int nn = static_cast<int>(td.nodes.size());
  for (int i = 0; i < nn; ++i)
    td.nodes[i].bag.for_each([&](int v) { bags_of[v].push_back(i); });
  std::vector<int> c1(nn, 0), size(nn);
  int violations = 0;
  for (int i = 0; i < nn; ++i) {
    size[i] = td.nodes[i].bag.count();
    if (size[i] > cap) ++violations;  // all on side 0 initially
  }
  auto violating = [&](int i) { return std::max(c1[i], size[i] - c1[i]) > cap; };
  std::vector<char> cur(n, 0);
  if (violations == 0) {
    side = cur;
    return true;
  }
  uint64_t steps = uint64_t{1} << n;
  for (uint64_t i = 1; i < steps; ++i) {
    int v = std::countr_zero(i);
    int delta = cur[v] ? -1 : +1;
    cur[v] ^= 1;
    for (int bi : bags_of[v]) {
      bool was = violating(bi);
      c1[bi] += delta;
      bool now = violating(bi);
      violations += static_cast<int>(now) - static_cast<int>(was);
    }
    if (violations == 0) {
      side = cur;
      return true;
    }
  }
  return false;
}

}  // namespace

BalancedPartition balanced_partition(const Graph& g, const NiceTreeDecomposition& td,
                                     int max_slack) {
  {
    auto issues = verify_nice(td, g);
    if (!issues.empty())
      throw ValidationError("balanced_partition: invalid decomposition: " + issues[0].axiom);
  }
  int n = td.n;
  BalancedPartition out{VertexSet(n), VertexSet(n), 0};
  if (n == 0) return out;
  int halfcap = (td.width + 1) / 2;  // ceil(width/2)

  // Greedy: walk parents-first; at each Forget(v), all other members of v's
  // topmost bag (the child bag) are already assigned; take the smaller side.
  std::vector<char> side(n, 0);
  std::vector<char> assigned(n, 0);
  for (int i = static_cast<int>(td.nodes.size()) - 1; i >= 0; --i) {
    const NiceNode& node = td.nodes[i];
    if (node.type != NodeType::Forget) continue;
    const VertexSet& topbag = td.nodes[node.child].bag;
    int c0 = 0, c1 = 0;
    topbag.for_each([&](int u) {
      if (assigned[u]) (side[u] ? c1 : c0)++;
    });
    side[node.vertex] = c0 <= c1 ? 0 : 1;
    assigned[node.vertex] = 1;
  }
  int slack = partition_slack(td, side, halfcap);

  // Local repair: flip single vertices out of the worst bags.
  for (int iter = 0; slack > 1 && iter < 200; ++iter) {
    int best_v = -1, best_slack = slack;
    for (int v = 0; v < n; ++v) {
      side[v] ^= 1;
      int s = partition_slack(td, side, halfcap);
      side[v] ^= 1;
      if (s < best_slack) {
        best_slack = s;
        best_v = v;
      }
    }
    if (best_v < 0) break;
    side[best_v] ^= 1;
    slack = best_slack;
  }
  // Exact fallback at small n.
  if (slack > 1 && n <= 18) {
    for (int cap_extra = 0; cap_extra < slack; ++cap_extra) {
      std::vector<char> exact;
      if (exact_partition(td, n, halfcap + cap_extra, exact)) {
        side = exact;
        slack = partition_slack(td, side, halfcap);
        break;
      }
    }
  }
  if (slack > max_slack)
    throw ValidationError("balanced_partition: achieved slack " + std::to_string(slack) +
                          " exceeds " + std::to_string(max_slack));
  for (int v = 0; v < n; ++v)
    (side[v] ? out.v2 : out.v1).set(v);
  out.slack = slack;
  assert(partition_slack(td, side, halfcap) == out.slack);
  return out;
}

RawDecomposition remap_decomposition(const RawDecomposition& td,
                                     const std::vector<int>& new_id_of, int new_n) {
  RawDecomposition out;
  out.n = new_n;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    VertexSet nb(new_n);
    bag.for_each([&](int v) {
      assert(new_id_of[v] >= 0 && new_id_of[v] < new_n);
      nb.set(new_id_of[v]);
    });
    out.bags.push_back(std::move(nb));
  }
  return out;
}

RawDecomposition add_to_all_bags(const RawDecomposition& td, int new_n, const VertexSet& extra) {
  RawDecomposition out;
  out.n = new_n;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    VertexSet nb(new_n);
    bag.for_each([&](int v) { nb.set(v); });
    extra.for_each([&](int v) { nb.set(v); });
    out.bags.push_back(std::move(nb));
  }
  return out;
}

RawDecomposition read_td(std::istream& in, const std::string& source) {
  auto fail = [&](int line, const std::string& what) -> void {
    throw InputError(source + ":" + std::to_string(line) + ": " + what);
  };
  RawDecomposition td;
  int declared_bags = -1, declared_width1 = -1;
  std::vector<char> seen_bag;
  int lineno = 0;
  std::string line;
  int edges_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "s") {
      std::string kind;
      if (declared_bags >= 0) fail(lineno, "duplicate 's td' header");
      if (!(ss >> kind >> declared_bags >> declared_width1 >> td.n) || kind != "td")
        fail(lineno, "expected 's td <bags> <width+1> <n>'");
      if (declared_bags < 1 || declared_width1 < 0 || td.n < 0)
        fail(lineno, "bad header values");
      td.bags.assign(declared_bags, VertexSet(td.n));
      seen_bag.assign(declared_bags, 0);
      continue;
    }
    if (declared_bags < 0) fail(lineno, "line before 's td' header");
    if (tag == "b") {
      int id;
      if (!(ss >> id) || id < 1 || id > declared_bags) fail(lineno, "bad bag id");
      if (seen_bag[id - 1]) fail(lineno, "duplicate bag id");
      seen_bag[id - 1] = 1;
      int v;
      while (ss >> v) {
        if (v < 1 || v > td.n) fail(lineno, "bag vertex out of range");
        td.bags[id - 1].set(v - 1);
      }
      if (!ss.eof()) {
        ss.clear();
        std::string junk;
        if (ss >> junk) fail(lineno, "bad token on bag line: " + junk);
      }
      continue;
    }
    // Tree edge line: two bag ids.
    int a, b;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 1 || a > declared_bags || b < 1 || b > declared_bags)
      fail(lineno, "expected tree edge '<a> <b>'");
    td.tree_edges.emplace_back(a - 1, b - 1);
    ++edges_seen;
  }
  if (declared_bags < 0) fail(lineno, "missing 's td' header");
  for (int i = 0; i < declared_bags; ++i)
    if (!seen_bag[i]) fail(lineno, "bag " + std::to_string(i + 1) + " never declared");
  if (edges_seen != declared_bags - 1)
    fail(lineno, "expected " + std::to_string(declared_bags - 1) + " tree edges");
  if (td.width() + 1 != declared_width1)
    fail(lineno, "header width+1 = " + std::to_string(declared_width1) +
                     " but bags have width+1 = " + std::to_string(td.width() + 1));
  return td;
}

RawDecomposition read_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_td(in, path);
}

void write_td(std::ostream& out, const RawDecomposition& td) {
  out << "s td " << td.bags.size() << ' ' << (td.width() + 1) << ' ' << td.n << '\n';
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << (i + 1);
    td.bags[i].for_each([&](int v) { out << ' ' << (v + 1); });
    out << '\n';
  }
  auto es = td.tree_edges;
  for (auto& [a, b] : es)
    if (a > b) std::swap(a, b);
  std::sort(es.begin(), es.end());
  for (auto [a, b] : es) out << (a + 1) << ' ' << (b + 1) << '\n';
}

void write_td_file(const std::string& path, const RawDecomposition& td) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_td(out, td);
}

}  // namespace domsetkit
