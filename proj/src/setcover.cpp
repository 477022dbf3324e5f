#include "domsetkit/setcover.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "domsetkit/errors.hpp"

namespace domsetkit {

namespace {

// Element masks per family set, after validating the instance shape.
std::vector<uint32_t> family_masks(const SetCoverInstance& inst, int cap) {
  if (inst.universe_size < 0) throw InputError("universe size must be nonnegative");
  if (inst.universe_size > cap)
    throw ResourceError("set cover universe of " + std::to_string(inst.universe_size) +
                        " exceeds the cap of " + std::to_string(cap));
  if (!inst.set_weights.empty() && inst.set_weights.size() != inst.family.size())
    throw InputError("set weight list does not match the family");
  for (Weight w : inst.set_weights)
    if (w < 0) throw InputError("set weights must be natural numbers");
  std::vector<uint32_t> masks;
  masks.reserve(inst.family.size());
  uint32_t all = 0;
  for (const auto& set : inst.family) {
    uint32_t m = 0;
    for (int e : set) {
      if (e < 0 || e >= inst.universe_size) throw InputError("family element out of range");
      m |= uint32_t{1} << e;
    }
    masks.push_back(m);
    all |= m;
  }
  uint32_t want = inst.universe_size == 32 ? ~uint32_t{0}
                                           : (uint32_t{1} << inst.universe_size) - 1;
  if (all != want) throw InputError("family union must equal the universe");
  return masks;
}

}  // namespace

std::vector<int> CoverTable::chosen(uint32_t mask) const {
  std::vector<int> out;
  while (mask) {
    int j = choice[mask];
    assert(j >= 0);  // every mask is coverable once the union check passed
    out.push_back(j);
    mask &= ~set_masks[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverTable solve_generalized(const SetCoverInstance& inst, int cap) {
  std::vector<uint32_t> masks = family_masks(inst, cap);
  CoverTable t;
  t.universe_size = inst.universe_size;
  t.set_masks = masks;
  size_t slots = size_t{1} << inst.universe_size;
  t.weight.assign(slots, kInfWeight);
  t.choice.assign(slots, -1);
  t.weight[0] = 0;
  for (uint32_t a = 1; a < slots; ++a) {
    for (size_t j = 0; j < masks.size(); ++j) {
      if (!(masks[j] & a)) continue;
      Weight cand = sat_add(inst.weight_of(j), t.weight[a & ~masks[j]]);
      if (cand < t.weight[a]) {
        t.weight[a] = cand;
        t.choice[a] = static_cast<int>(j);
      }
    }
  }
  return t;
}

GreedyCover greedy_approx(const SetCoverInstance& inst) {
  std::vector<uint32_t> masks = family_masks(inst, 32);
  GreedyCover out;
  uint32_t covered = 0;
  uint32_t want = inst.universe_size == 32 ? ~uint32_t{0}
                                           : (uint32_t{1} << inst.universe_size) - 1;
  while (covered != want) {
    int best = -1;
    int best_new = 0;
    for (size_t j = 0; j < masks.size(); ++j) {
      int fresh = std::popcount(masks[j] & ~covered);
      if (fresh == 0) continue;
      if (best < 0) {
        best = static_cast<int>(j);
        best_new = fresh;
        continue;
      }
      // weight_j / fresh_j < weight_best / best_new, cross-multiplied.
      __int128 lhs = static_cast<__int128>(inst.weight_of(j)) * best_new;
      __int128 rhs = static_cast<__int128>(inst.weight_of(best)) * fresh;
      if (lhs < rhs) {
        best = static_cast<int>(j);
        best_new = fresh;
      }
    }
    if (best < 0) throw InputError("instance does not cover its universe");
    out.chosen.push_back(best);
    out.weight = sat_add(out.weight, inst.weight_of(best));
    covered |= masks[best];
  }
  return out;
}

SolveResult greedy_dominating(const Graph& g, const WeightFn& w) {
  SetCoverInstance cover;
  cover.universe_size = g.n();
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> closed = g.neighbors(v);
    closed.push_back(v);
    std::sort(closed.begin(), closed.end());
    cover.family.push_back(std::move(closed));
  }
  if (!w.is_unit()) {
    cover.set_weights.resize(g.n());
    for (int v = 0; v < g.n(); ++v) cover.set_weights[v] = w(v);
  }
  GreedyCover picked = greedy_approx(cover);
  SolveResult r{VertexSet(g.n()), 0};
  for (int j : picked.chosen) r.solution.set(j);
  r.weight = w.total(r.solution);
  return r;
}

}  // namespace domsetkit
