#include "domsetkit/approx_k.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "domsetkit/errors.hpp"
#include "domsetkit/setcover.hpp"

namespace domsetkit {

int TradeoffConfig::subset_bound() const {
  return static_cast<int>(static_cast<int64_t>(alpha_num) * k / alpha_den) + 1;
}

namespace {

struct ApexGadget {
  Graph g;
  std::vector<int> back;  // gadget id -> source id; -1 for the apex
  int apex = 0;
};

ApexGadget build_gadget(const Graph& g, const VertexSet& u) {
  const int n = g.n();
  std::vector<int> fwd(n, -1);
  std::vector<int> back;
  for (int v = 0; v < n; ++v) {
    if (u.test(v)) continue;
    fwd[v] = static_cast<int>(back.size());
    back.push_back(v);
  }
  const int apex = static_cast<int>(back.size());
  Graph gu(apex + 1);
  for (auto [a, b] : g.edges())
    if (fwd[a] != -1 && fwd[b] != -1) gu.add_edge(fwd[a], fwd[b]);
  VertexSet fringe(n);
  u.for_each([&](int v) {
    for (int x : g.neighbors(v))
      if (!u.test(x)) fringe.set(x);
  });
  fringe.for_each([&](int v) { gu.add_edge(fwd[v], apex); });
  back.push_back(-1);
  return {std::move(gu), std::move(back), apex};
}

void check_config(const TradeoffConfig& cfg) {
  if (cfg.alpha_den <= 0 || cfg.alpha_num < 0 || cfg.alpha_num >= cfg.alpha_den)
    throw InputError("alpha must be a rational in [0, 1)");
  if (cfg.k < 0) throw InputError("budget k must be nonnegative");
  if (cfg.max_subset < 1) throw InputError("subset cap must be at least 1");
}

}  // namespace

TradeoffResult approx_tradeoff(const Graph& g, const TradeoffConfig& cfg) {
  check_config(cfg);
  const int n = g.n();
  const int bound = cfg.subset_bound();
  if (bound > cfg.max_subset)
    throw ResourceError("subset enumeration of " + std::to_string(bound) +
                        " exceeds the cap of " + std::to_string(cfg.max_subset));

  TradeoffResult out;
  out.subset_bound = bound;
  out.solution = VertexSet(n);
  out.best_seed = VertexSet(n);
  int best = n + 1;

  bool stop = false;
  for (int size = 0; size <= std::min(bound, n) && !stop; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet u(n);
      for (int i : idx) u.set(i);
      ++out.iterations;

      ApexGadget gu = build_gadget(g, u);
      VertexSet cand = u;
      if (gu.g.degree(gu.apex) == gu.apex) {
        // the seed dominates everything else: no later seed of equal or
        // larger size can beat it
        stop = true;
        out.early_exit = true;
      } else {
        SetCoverInstance cover;
        cover.universe_size = gu.apex + 1;
        for (int v = 0; v <= gu.apex; ++v) {
          std::vector<int> closed = gu.g.neighbors(v);
          closed.push_back(v);
          std::sort(closed.begin(), closed.end());
          cover.family.push_back(std::move(closed));
        }
        GreedyCover picked = greedy_approx(cover);
        for (int j : picked.chosen)
          if (j != gu.apex) cand.set(gu.back[j]);
      }

      int cand_size = static_cast<int>(cand.count());
      if (cand_size < best) {
        assert(is_dominating(g, cand, VertexSet::full(n)));
        best = cand_size;
        out.solution = cand;
        out.best_seed = u;
        out.trace.push_back({out.iterations, cand_size});
      }
      if (stop) break;

      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.size = best;
  assert(is_dominating(g, out.solution, VertexSet::full(n)));
  return out;
}

}  // namespace domsetkit
