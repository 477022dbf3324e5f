#include "domsetkit/generators.hpp"

#include <algorithm>
#include <random>

#include "domsetkit/errors.hpp"

namespace domsetkit {

namespace {

std::vector<std::vector<int>> checked_family(int universe_size,
                                             const std::vector<std::vector<int>>& family) {
  if (universe_size <= 0) throw InputError("universe must be nonempty");
  if (family.empty()) throw InputError("family must be nonempty");
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (const auto& f : family) {
    if (f.empty()) throw InputError("family sets must be nonempty");
    auto s = f;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int u : s)
      if (u < 0 || u >= universe_size) throw InputError("family element outside universe");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Graph gen_from_hitting_set(int universe_size, const std::vector<std::vector<int>>& family) {
  auto fam = checked_family(universe_size, family);
  int nf = static_cast<int>(fam.size());
  int x = universe_size + nf, y = x + 1;
  Graph g(universe_size + nf + 2);
  for (int j = 0; j < nf; ++j)
    for (int u : fam[j]) g.add_edge(u, universe_size + j);
  for (int u = 0; u < universe_size; ++u) g.add_edge(u, x);
  g.add_edge(x, y);
  return g;
}

Graph gen_from_set_cover(int universe_size, const std::vector<std::vector<int>>& family) {
  auto fam = checked_family(universe_size, family);
  int nf = static_cast<int>(fam.size());
  int x = universe_size + nf, y = x + 1;
  Graph g(universe_size + nf + 2);
  for (int j = 0; j < nf; ++j)
    for (int u : fam[j]) g.add_edge(u, universe_size + j);
  for (int j = 0; j < nf; ++j) g.add_edge(x, universe_size + j);
  g.add_edge(x, y);
  return g;
}

Graph gen_random(int n, double edge_probability, uint64_t seed) {
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw InputError("edge probability must be in [0,1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  bool all = edge_probability >= 1.0;
  bool none = edge_probability <= 0.0;
  // Compare against a fixed integer threshold so p=0 and p=1 are exact.
  uint64_t threshold =
      all || none ? 0 : static_cast<uint64_t>(edge_probability * 18446744073709551616.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      uint64_t r = rng();
      if (all || (!none && r < threshold)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph gen_cactus(int n, uint64_t seed) {
  Graph g(std::max(n, 0));
  if (n <= 1) return g;
  std::mt19937_64 rng(seed);
  int built = 1;
  while (built < n) {
    int attach = static_cast<int>(rng() % static_cast<uint64_t>(built));
    int remaining = n - built;
    // Either a pendant edge or a cycle through `attach` using fresh vertices.
    bool cycle = remaining >= 2 && (rng() & 1);
    if (!cycle) {
      g.add_edge(attach, built);
      built += 1;
      continue;
    }
    int max_new = std::min(remaining, 8);
    int fresh = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_new - 1));
    int prev = attach;
    for (int i = 0; i < fresh; ++i) {
      g.add_edge(prev, built + i);
      prev = built + i;
    }
    g.add_edge(prev, attach);
    built += fresh;
  }
  return g;
}

WeightFn gen_weights(int n, Weight lo, Weight hi, uint64_t seed) {
  if (lo < 0 || hi < lo) throw InputError("invalid weight range");
  std::mt19937_64 rng(seed);
  WeightFn w;
  w.w.resize(n);
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  for (int v = 0; v < n; ++v) w.w[v] = lo + static_cast<Weight>(rng() % span);
  return w;
}

}  // namespace domsetkit
