#include "domsetkit/dp_tw.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>

#include "domsetkit/errors.hpp"
#include "domsetkit/minplus.hpp"

namespace domsetkit {

namespace {

// Per-position codes. Positions whose vertex needs domination take three
// values, the rest two.
constexpr int kOut = 0, kIn = 1;                  // not in / in the solution
constexpr int kNotDom = 0, kDom = 1, kInSol = 2;  // no requirement / must be
                                                  // dominated / in the solution

// Indicator-vector lexicographic preference: at the smallest differing vertex
// id, the set containing it wins. Compositional under the DP's disjoint
// unions; coincides with sorted-sequence order whenever cardinalities match.
bool lex_prefer(const VertexSet& a, const VertexSet& b) {
  for (size_t i = 0; i < a.word_count(); ++i) {
    uint64_t diff = a.word(i) ^ b.word(i);
    if (diff) return (a.word(i) >> std::countr_zero(diff)) & 1;
  }
  return false;
}

struct NodeCtx {
  std::vector<int> bag;      // ascending vertex ids
  std::vector<char> needed;  // per position: vertex is in d_set
  std::vector<int> radix;    // 2 or 3
  std::vector<size_t> mult;  // mixed-radix multipliers
  size_t size = 1;

  int pos_of(int v) const {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    assert(it != bag.end() && *it == v);
    return static_cast<int>(it - bag.begin());
  }
};

// Odometer over mixed-radix codes; returns false after the last state.
bool advance(std::vector<int>& codes, const std::vector<int>& radix) {
  for (size_t i = 0; i < codes.size(); ++i) {
    if (++codes[i] < radix[i]) return true;
    codes[i] = 0;
  }
  return false;
}

struct Engine {
  const Graph& g;
  const WeightFn& w;
  const NiceTreeDecomposition& td;
  const VertexSet& dset;
  JoinMode mode;
  std::vector<NodeCtx> ctx;
  std::vector<std::vector<Weight>> tab;

  Engine(const Graph& g_, const WeightFn& w_, const NiceTreeDecomposition& td_,
         const VertexSet& dset_, JoinMode mode_)
      : g(g_), w(w_), td(td_), dset(dset_), mode(mode_) {}

  void build_ctx() {
    int nn = static_cast<int>(td.nodes.size());
    ctx.resize(nn);
    for (int x = 0; x < nn; ++x) {
      NodeCtx& c = ctx[x];
      c.bag = td.nodes[x].bag.to_vector();
      int twos = 0, threes = 0;
      for (int v : c.bag) {
        bool need = dset.test(v);
        c.needed.push_back(need);
        c.radix.push_back(need ? 3 : 2);
        (need ? threes : twos)++;
      }
      c.mult.resize(c.bag.size());
      c.size = 1;
      for (size_t i = 0; i < c.bag.size(); ++i) {
        c.mult[i] = c.size;
        c.size *= c.radix[i];
      }
      size_t expect = 1;
      for (int i = 0; i < twos; ++i) expect *= 2;
      for (int i = 0; i < threes; ++i) expect *= 3;
      assert(c.size == expect);
      (void)expect;
    }
  }

  size_t encode(const NodeCtx& c, const std::vector<int>& codes) const {
    size_t idx = 0;
    for (size_t i = 0; i < codes.size(); ++i) idx += codes[i] * c.mult[i];
    return idx;
  }

  bool in_solution(const NodeCtx& c, const std::vector<int>& codes, size_t i) const {
    return codes[i] == (c.needed[i] ? kInSol : kIn);
  }

  void fill() {
    tab.resize(td.nodes.size());
    for (int x = 0; x < static_cast<int>(td.nodes.size()); ++x) {
      switch (td.nodes[x].type) {
        case NodeType::Leaf:
          tab[x].assign(1, 0);
          break;
        case NodeType::Introduce:
          fill_introduce(x);
          break;
        case NodeType::Forget:
          fill_forget(x);
          break;
        case NodeType::Join:
          fill_join(x);
          break;
      }
    }
  }

  // Child state matching one parent state of an Introduce node; returns the
  // weight delta, or kInfWeight when the parent state is infeasible.
  Weight introduce_child_state(int x, const std::vector<int>& codes, size_t& child_idx) const {
    const NiceNode& node = td.nodes[x];
    const NodeCtx& pc = ctx[x];
    const NodeCtx& cc = ctx[node.child];
    int p = pc.pos_of(node.vertex);
    bool taken = in_solution(pc, codes, static_cast<size_t>(p));
    std::vector<int> child_codes;
    child_codes.reserve(codes.size() - 1);
    for (size_t i = 0; i < codes.size(); ++i) {
      if (static_cast<int>(i) == p) continue;
      int code = codes[i];
      // The new solution vertex discharges the domination requirement of
      // adjacent bag mates; the child need not enforce it.
      if (taken && pc.needed[i] && code == kDom && g.has_edge(node.vertex, pc.bag[i]))
        code = kNotDom;
      child_codes.push_back(code);
    }
    if (!taken && pc.needed[p] && codes[p] == kDom) {
      // All neighbors of a freshly introduced vertex inside the current cone
      // sit in the bag, so the requirement is satisfiable only there.
      bool dominated = false;
      for (size_t i = 0; i < codes.size() && !dominated; ++i)
        if (static_cast<int>(i) != p && in_solution(pc, codes, i) &&
            g.has_edge(node.vertex, pc.bag[i]))
          dominated = true;
      if (!dominated) return kInfWeight;
    }
    child_idx = encode(cc, child_codes);
    return taken ? w(node.vertex) : 0;
  }

  void fill_introduce(int x) {
    const NodeCtx& pc = ctx[x];
    tab[x].assign(pc.size, kInfWeight);
    std::vector<int> codes(pc.bag.size(), 0);
    size_t idx = 0;
    do {
      size_t child_idx = 0;
      Weight delta = introduce_child_state(x, codes, child_idx);
      if (delta < kInfWeight)
        tab[x][idx] = sat_add(tab[td.nodes[x].child][child_idx], delta);
      ++idx;
    } while (advance(codes, pc.radix));
    assert(idx == pc.size);
  }

  // The two child states a Forget node minimizes over: the forgotten vertex
  // in the solution, or out with its domination settled if required.
  void forget_child_states(int x, const std::vector<int>& codes, size_t& opt_in,
                           size_t& opt_out) const {
    const NiceNode& node = td.nodes[x];
    const NodeCtx& cc = ctx[node.child];
    int p = cc.pos_of(node.vertex);
    std::vector<int> child_codes(codes.size() + 1);
    for (size_t i = 0, j = 0; i < child_codes.size(); ++i)
      child_codes[i] = static_cast<int>(i) == p ? 0 : codes[j++];
    bool need = dset.test(node.vertex);
    child_codes[p] = need ? kInSol : kIn;
    opt_in = encode(cc, child_codes);
    child_codes[p] = need ? kDom : kOut;
    opt_out = encode(cc, child_codes);
  }

  void fill_forget(int x) {
    const NodeCtx& pc = ctx[x];
    int c = td.nodes[x].child;
    tab[x].assign(pc.size, kInfWeight);
    std::vector<int> codes(pc.bag.size(), 0);
    size_t idx = 0;
    do {
      size_t a, b;
      forget_child_states(x, codes, a, b);
      tab[x][idx] = std::min(tab[c][a], tab[c][b]);
      ++idx;
    } while (advance(codes, pc.radix));
  }

  // Join slices: fix every position except the dominated/no-requirement
  // split of the required positions outside the solution, then combine the
  // children over that split with a subset convolution:
  // parent(R) = min over T of left(T) + right(R\T) - w(bag solution),
  // since both children account for the shared bag solution.
  void fill_join(int x) {
    const NodeCtx& pc = ctx[x];
    int ca = td.nodes[x].child, cb = td.nodes[x].child2;
    tab[x].assign(pc.size, kInfWeight);
    int b = static_cast<int>(pc.bag.size());
    std::vector<int> pattern(b, 0);  // required: 0=split slot, 1=kInSol;
    std::vector<int> two(b, 2);      // others: 0=kOut, 1=kIn
    do {
      std::vector<int> free_pos;
      std::vector<int> base(b);
      Weight wbag = 0;
      for (int i = 0; i < b; ++i) {
        if (pc.needed[i] && !pattern[i]) {
          free_pos.push_back(i);
          continue;
        }
        base[i] = pattern[i] ? (pc.needed[i] ? kInSol : kIn) : kOut;
        if (pattern[i]) wbag = sat_add(wbag, w(pc.bag[i]));
      }
      int m = static_cast<int>(free_pos.size());
      size_t slots = size_t{1} << m;
      std::vector<Weight> f(slots), gz(slots);
      std::vector<size_t> state_of(slots);
      std::vector<int> codes = base;
      for (size_t mask = 0; mask < slots; ++mask) {
        for (int i = 0; i < m; ++i) codes[free_pos[i]] = (mask >> i & 1) ? kDom : kNotDom;
        size_t idx = encode(pc, codes);
        state_of[mask] = idx;
        f[mask] = tab[ca][idx];
        gz[mask] = tab[cb][idx];
      }
      bool fast = mode == JoinMode::Convolution || (mode == JoinMode::Auto && m > 8);
      std::vector<Weight> h = fast ? minplus_subset_convolution(f, gz)
                                   : minplus_subset_convolution_naive(f, gz);
      for (size_t mask = 0; mask < slots; ++mask)
        tab[x][state_of[mask]] = h[mask] >= kInfWeight ? kInfWeight : h[mask] - wbag;
    } while (advance(pattern, two));
  }
};

struct Backtracker {
  const Engine& e;
  std::vector<std::unordered_map<size_t, VertexSet>> memo;

  explicit Backtracker(const Engine& e_) : e(e_), memo(e.td.nodes.size()) {}

  // Lexicographically preferred minimum-weight partial solution for a state.
  const VertexSet& best(int x, size_t idx) {
    auto it = memo[x].find(idx);
    if (it != memo[x].end()) return it->second;
    assert(e.tab[x][idx] < kInfWeight);
    const NiceNode& node = e.td.nodes[x];
    const NodeCtx& pc = e.ctx[x];
    VertexSet sol(e.td.n);
    std::vector<int> codes(pc.bag.size());
    size_t rest = idx;
    for (size_t i = 0; i < codes.size(); ++i) {
      codes[i] = static_cast<int>(rest % pc.radix[i]);
      rest /= pc.radix[i];
    }
    switch (node.type) {
      case NodeType::Leaf:
        break;
      case NodeType::Introduce: {
        size_t child_idx = 0;
        Weight delta = e.introduce_child_state(x, codes, child_idx);
        assert(delta < kInfWeight);
        (void)delta;
        sol = best(node.child, child_idx);
        int p = pc.pos_of(node.vertex);
        if (e.in_solution(pc, codes, static_cast<size_t>(p))) sol.set(node.vertex);
        break;
      }
      case NodeType::Forget: {
        size_t a, b;
        e.forget_child_states(x, codes, a, b);
        Weight want = e.tab[x][idx];
        bool take_a = e.tab[node.child][a] == want;
        bool take_b = e.tab[node.child][b] == want;
        assert(take_a || take_b);
        if (take_a && take_b) {
          const VertexSet& sa = best(node.child, a);
          const VertexSet& sb = best(node.child, b);
          sol = lex_prefer(sa, sb) ? sa : sb;
        } else {
          sol = best(node.child, take_a ? a : b);
        }
        break;
      }
      case NodeType::Join: {
        Weight want = e.tab[x][idx];
        // Recover the slice and re-derive the splits achieving the optimum;
        // convolution-filled entries carry no winning split, so scan.
        std::vector<int> free_pos;
        Weight wbag = 0;
        uint64_t r_mask = 0;
        for (size_t i = 0; i < codes.size(); ++i) {
          if (e.in_solution(pc, codes, i)) wbag = sat_add(wbag, e.w(pc.bag[i]));
          if (pc.needed[i] && codes[i] != kInSol) {
            if (codes[i] == kDom) r_mask |= uint64_t{1} << free_pos.size();
            free_pos.push_back(static_cast<int>(i));
          }
        }
        std::vector<int> ccodes = codes;
        auto state_for = [&](uint64_t t) {
          for (size_t i = 0; i < free_pos.size(); ++i)
            ccodes[free_pos[i]] = (t >> i & 1) ? kDom : kNotDom;
          return e.encode(pc, ccodes);
        };
        bool have = false;
        uint64_t t = r_mask;
        while (true) {  // submasks of r_mask, including 0 and r_mask
          size_t sy = state_for(t);
          size_t sz = state_for(r_mask ^ t);
          Weight total = sat_add(e.tab[node.child][sy], e.tab[node.child2][sz]);
          if (total < kInfWeight && total - wbag == want) {
            VertexSet cand = best(node.child, sy);
            cand |= best(node.child2, sz);
            if (!have || lex_prefer(cand, sol)) {
              sol = cand;
              have = true;
            }
          }
          if (t == 0) break;
          t = (t - 1) & r_mask;
        }
        assert(have);
        break;
      }
    }
    return memo[x].emplace(idx, std::move(sol)).first->second;
  }
};

void check_inputs(const Graph& g, const NiceTreeDecomposition& td, const VertexSet& d_set) {
  if (d_set.universe() != g.n()) throw InputError("d_set universe does not match graph");
  auto issues = verify_nice(td, g);
  if (!issues.empty())
    throw ValidationError("invalid nice tree decomposition: " + issues[0].axiom + ": " +
                          issues[0].detail);
}

}  // namespace

SolveResult solve_half_width(const Graph& g, const WeightFn& w, const NiceTreeDecomposition& td,
                             const VertexSet& d_set, JoinMode mode) {
  check_inputs(g, td, d_set);
  Engine e(g, w, td, d_set, mode);
  e.build_ctx();
  e.fill();
  Weight opt = e.tab[td.root()][0];
  assert(opt < kInfWeight);
  Backtracker bt(e);
  VertexSet sol = bt.best(td.root(), 0);
  assert(w.total(sol) == opt);
  assert(is_dominating(g, sol, d_set));
  return {sol, opt};
}

SolveResult solve_exact_tw(const Graph& g, const WeightFn& w, const NiceTreeDecomposition& td,
                           JoinMode mode) {
  return solve_half_width(g, w, td, VertexSet::full(g.n()), mode);
}

std::pair<SolveResult, Approx2Certificate> approx2_tw(const Graph& g, const WeightFn& w,
                                                      const NiceTreeDecomposition& td) {
  BalancedPartition bp = balanced_partition(g, td);
  SolveResult s1 = solve_half_width(g, w, td, bp.v1);
  SolveResult s2 = solve_half_width(g, w, td, bp.v2);
  SolveResult out;
  out.solution = s1.solution | s2.solution;
  out.weight = w.total(out.solution);
  Approx2Certificate cert;
  cert.half1 = s1.weight;
  cert.half2 = s2.weight;
  cert.slack = bp.slack;
  cert.verified = is_dominating(g, out.solution, VertexSet::full(g.n()));
  assert(cert.verified);
  assert(out.weight <= sat_add(s1.weight, s2.weight));
  return {out, cert};
}

std::vector<NodeStates> half_width_tables(const Graph& g, const WeightFn& w,
                                          const NiceTreeDecomposition& td, const VertexSet& d_set,
                                          JoinMode mode) {
  check_inputs(g, td, d_set);
  Engine e(g, w, td, d_set, mode);
  e.build_ctx();
  e.fill();
  std::vector<NodeStates> out;
  out.reserve(td.nodes.size());
  for (size_t x = 0; x < td.nodes.size(); ++x) out.push_back({e.ctx[x].bag, e.tab[x]});
  return out;
}

}  // namespace domsetkit
