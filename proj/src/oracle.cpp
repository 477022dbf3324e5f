#include "domsetkit/oracle.hpp"

#include <bit>
#include <cassert>

#include "domsetkit/errors.hpp"

namespace domsetkit {

OracleResult brute_min_dominating(const Graph& g, const WeightFn& w,
                                  const VertexSet& targets, const VertexSet& forced_in,
                                  const VertexSet& forbidden) {
  int n = g.n();
  if (n > 22) throw ResourceError("brute_min_dominating: n > 22");
  assert(targets.universe() == n && forced_in.universe() == n && forbidden.universe() == n);
  OracleResult res;
  if (forced_in.intersects(forbidden)) return res;

  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (!forced_in.test(v) && !forbidden.test(v)) free.push_back(v);
  int f = static_cast<int>(free.size());

  std::vector<int> cover(n, 0);
  std::vector<char> is_target(n, 0);
  targets.for_each([&](int v) { is_target[v] = 1; });
  int uncovered = targets.count();
  auto toggle = [&](int v, int delta) {
    auto touch = [&](int u) {
      if (delta > 0) {
        if (cover[u]++ == 0 && is_target[u]) --uncovered;
      } else {
        if (--cover[u] == 0 && is_target[u]) ++uncovered;
      }
    };
    touch(v);
    for (int u : g.neighbors(v)) touch(u);
  };

  VertexSet cur = forced_in;
  Weight cur_w = 0;
  forced_in.for_each([&](int v) {
    cur_w = sat_add(cur_w, w(v));
    toggle(v, +1);
  });

  auto consider = [&]() {
    if (uncovered != 0) return;
    if (cur_w < res.weight) {
      res.weight = cur_w;
      res.witness = cur;
      res.optimum_count = 1;
    } else if (cur_w == res.weight) {
      ++res.optimum_count;
    }
  };
  consider();
  // Gray-code walk over subsets of the free vertices: one toggle per step.
  for (uint64_t i = 1; i < (uint64_t{1} << f); ++i) {
    int bit = std::countr_zero(i);
    int v = free[bit];
    if (cur.test(v)) {
      cur.reset(v);
      cur_w -= w(v);
      toggle(v, -1);
    } else {
      cur.set(v);
      cur_w = sat_add(cur_w, w(v));
      toggle(v, +1);
    }
    consider();
  }
  if (res.witness) assert(is_dominating(g, *res.witness, targets));
  return res;
}

OracleResult brute_min_dominating(const Graph& g, const WeightFn& w) {
  VertexSet all = VertexSet::full(g.n());
  VertexSet none(g.n());
  return brute_min_dominating(g, w, all, none, none);
}

CoverResult brute_min_hitting_set(const CoverInstance& inst) {
  if (inst.universe_size > 16) throw ResourceError("brute_min_hitting_set: universe > 16");
  if (inst.family.size() > 16) throw ResourceError("brute_min_hitting_set: family > 16");
  int nu = inst.universe_size;
  int nf = static_cast<int>(inst.family.size());
  std::vector<uint32_t> hits(nu, 0);
  for (int j = 0; j < nf; ++j)
    for (int e : inst.family[j]) {
      assert(e >= 0 && e < nu);
      hits[e] |= uint32_t{1} << j;
    }
  uint32_t want = nf == 0 ? 0 : (uint32_t{1} << nf) - 1;
  CoverResult res;
  for (uint32_t s = 0; s < (uint32_t{1} << nu); ++s) {
    uint32_t got = 0;
    for (int e = 0; e < nu; ++e)
      if (s >> e & 1) got |= hits[e];
    if (got != want) continue;
    Weight wt = std::popcount(s);
    if (!res.feasible || wt < res.weight) {
      res.feasible = true;
      res.weight = wt;
      res.chosen.clear();
      for (int e = 0; e < nu; ++e)
        if (s >> e & 1) res.chosen.push_back(e);
    }
  }
  return res;
}

CoverResult brute_min_set_cover(const CoverInstance& inst) {
  if (inst.universe_size > 16) throw ResourceError("brute_min_set_cover: universe > 16");
  if (inst.family.size() > 16) throw ResourceError("brute_min_set_cover: family > 16");
  int nu = inst.universe_size;
  int nf = static_cast<int>(inst.family.size());
  std::vector<uint32_t> mask(nf, 0);
  for (int j = 0; j < nf; ++j)
    for (int e : inst.family[j]) {
      assert(e >= 0 && e < nu);
      mask[j] |= uint32_t{1} << e;
    }
  uint32_t want = nu == 0 ? 0 : (uint32_t{1} << nu) - 1;
  CoverResult res;
  for (uint32_t s = 0; s < (uint32_t{1} << nf); ++s) {
    uint32_t got = 0;
    Weight wt = 0;
    for (int j = 0; j < nf; ++j)
      if (s >> j & 1) {
        got |= mask[j];
        wt = sat_add(wt, inst.set_weights.empty() ? 1 : inst.set_weights[j]);
      }
    if (got != want) continue;
    if (!res.feasible || wt < res.weight) {
      res.feasible = true;
      res.weight = wt;
      res.chosen.clear();
      for (int j = 0; j < nf; ++j)
        if (s >> j & 1) res.chosen.push_back(j);
    }
  }
  return res;
}

}  // namespace domsetkit
