#include "domsetkit/minplus.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

namespace domsetkit {

namespace {

int ground_size(size_t table_size) {
  int m = std::countr_zero(table_size);
  assert(table_size == (size_t{1} << m));
  return m;
}

// Ranked zeta transform of the indicator [f(S) == value]:
// z[k][S] = #{T ⊆ S : |T| = k, f(T) = value}.
std::vector<std::vector<uint64_t>> ranked_zeta(const std::vector<Weight>& f, Weight value,
                                               int m) {
  size_t sz = f.size();
  std::vector<std::vector<uint64_t>> z(m + 1, std::vector<uint64_t>(sz, 0));
  for (size_t s = 0; s < sz; ++s)
    if (f[s] == value) z[std::popcount(s)][s] = 1;
  for (int k = 0; k <= m; ++k)
    for (int i = 0; i < m; ++i)
      for (size_t s = 0; s < sz; ++s)
        if (s >> i & 1) z[k][s] += z[k][s ^ (size_t{1} << i)];
  return z;
}

}  // namespace

std::vector<Weight> minplus_subset_convolution_naive(const std::vector<Weight>& f,
                                                     const std::vector<Weight>& g) {
  assert(f.size() == g.size());
  size_t sz = f.size();
  std::vector<Weight> h(sz, kInfWeight);
  for (size_t r = 0; r < sz; ++r) {
    Weight best = kInfWeight;
    size_t t = r;
    while (true) {  // all submasks of r, including 0 and r
      best = std::min(best, sat_add(f[t], g[r ^ t]));
      if (t == 0) break;
      t = (t - 1) & r;
    }
    h[r] = best;
  }
  return h;
}

std::vector<Weight> minplus_subset_convolution(const std::vector<Weight>& f,
                                               const std::vector<Weight>& g) {
  assert(f.size() == g.size());
  size_t sz = f.size();
  int m = ground_size(sz);
  if (m <= 3) return minplus_subset_convolution_naive(f, g);

  std::vector<Weight> vf(f.begin(), f.end()), vg(g.begin(), g.end());
  auto distinct = [](std::vector<Weight>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    while (!v.empty() && v.back() >= kInfWeight) v.pop_back();
  };
  distinct(vf);
  distinct(vg);
  std::vector<Weight> h(sz, kInfWeight);
  if (vf.empty() || vg.empty()) return h;
  if (vf.size() * vg.size() > 4096) return minplus_subset_convolution_naive(f, g);

  // Lazily cached ranked zetas per value.
  std::map<Weight, std::vector<std::vector<uint64_t>>> zf_cache, zg_cache;
  auto zeta_of = [&](std::map<Weight, std::vector<std::vector<uint64_t>>>& cache,
                     const std::vector<Weight>& fn,
                     Weight value) -> const std::vector<std::vector<uint64_t>>& {
    auto it = cache.find(value);
    if (it == cache.end()) it = cache.emplace(value, ranked_zeta(fn, value, m)).first;
    return it->second;
  };

  size_t unresolved = sz;
  // Ascending walk over value-pair sums in the vf x vg grid.
  using Cell = std::pair<Weight, std::pair<int, int>>;
  std::priority_queue<Cell, std::vector<Cell>, std::greater<>> heap;
  std::set<std::pair<int, int>> queued;
  auto push = [&](int i, int j) {
    if (i >= static_cast<int>(vf.size()) || j >= static_cast<int>(vg.size())) return;
    if (!queued.insert({i, j}).second) return;
    heap.push({sat_add(vf[i], vg[j]), {i, j}});
  };
  push(0, 0);
  std::vector<std::vector<uint64_t>> w(m + 1, std::vector<uint64_t>(sz));
  while (!heap.empty() && unresolved > 0) {
    auto [sum, ij] = heap.top();
    heap.pop();
    auto [i, j] = ij;
    push(i + 1, j);
    push(i, j + 1);
    const auto& za = zeta_of(zf_cache, f, vf[i]);
    const auto& zb = zeta_of(zg_cache, g, vg[j]);
    // w[k] = pointwise sum over rank splits, then ranked Moebius.
    for (int k = 0; k <= m; ++k) {
      auto& wk = w[k];
      std::fill(wk.begin(), wk.end(), 0);
      for (int a = 0; a <= k; ++a) {
        const auto& za_a = za[a];
        const auto& zb_b = zb[k - a];
        for (size_t s = 0; s < sz; ++s) wk[s] += za_a[s] * zb_b[s];
      }
      for (int bit = 0; bit < m; ++bit)
        for (size_t s = 0; s < sz; ++s)
          if (s >> bit & 1) wk[s] -= wk[s ^ (size_t{1} << bit)];
    }
    for (size_t r = 0; r < sz; ++r)
      if (h[r] >= kInfWeight && w[std::popcount(r)][r] != 0) {
        h[r] = sum;
        --unresolved;
      }
  }
  return h;
}

}  // namespace domsetkit
