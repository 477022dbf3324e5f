#include "domsetkit/modulator.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <string>

#include "domsetkit/errors.hpp"

namespace domsetkit {

namespace {

void check_instance(const ModulatorInstance& inst) {
  if (inst.m.universe() != inst.g.n()) throw InputError("modulator universe does not match graph");
  if (inst.d < 0) throw InputError("treewidth bound must be nonnegative");
}

void check_cap(int size, int cap, const char* what) {
  if (size > cap)
    throw ResourceError(std::string(what) + " of " + std::to_string(size) +
                        " exceeds the cap of " + std::to_string(cap));
}

// tw(g) <= d, decided exactly (d <= 2 directly, d >= 3 via the search for
// n <= 25; larger graphs fall back to the heuristic width).
bool width_at_most(const Graph& g, int d) {
  if (d <= 2) {
    try {
      decompose_bounded_raw(g, d);
      return true;
    } catch (const WidthExceededError&) {
      return false;
    }
  }
  return decompose_bounded_raw(g, d).width() <= d;
}

}  // namespace

SolveResult ModulatorTable::query(const VertexSet& a) const {
  if (a.universe() != n) throw InputError("query universe does not match graph");
  uint32_t mask = 0;
  for (size_t i = 0; i < m_vertices.size(); ++i)
    if (a.test(m_vertices[i])) mask |= uint32_t{1} << i;
  VertexSet check = a;
  for (int v : m_vertices) check.reset(v);
  if (check.count() > 0) throw InputError("query is not a subset of the modulator");
  SolveResult out{VertexSet(n), table.weight_of(mask)};
  for (int j : table.chosen(mask)) out.solution.set(representative[j]);
  return out;
}

ModulatorTable solve_generalized_modulator(const ModulatorInstance& inst, int cap) {
  check_instance(inst);
  check_cap(inst.m.count(), cap, "modulator");
  ModulatorTable out;
  out.n = inst.g.n();
  out.m_vertices = inst.m.to_vector();
  std::vector<int> pos(inst.g.n(), -1);
  for (size_t i = 0; i < out.m_vertices.size(); ++i) pos[out.m_vertices[i]] = static_cast<int>(i);

  // Deduplicate neighborhood traces; keep the lightest witness, smallest id
  // on ties (ascending scan with strict improvement).
  std::map<uint32_t, int> rep_of;
  for (int v = 0; v < inst.g.n(); ++v) {
    uint32_t mask = 0;
    if (pos[v] >= 0) mask |= uint32_t{1} << pos[v];
    for (int u : inst.g.neighbors(v))
      if (pos[u] >= 0) mask |= uint32_t{1} << pos[u];
    auto [it, fresh] = rep_of.try_emplace(mask, v);
    if (!fresh && inst.w(v) < inst.w(it->second)) it->second = v;
  }

  SetCoverInstance cover;
  cover.universe_size = static_cast<int>(out.m_vertices.size());
  for (auto [mask, v] : rep_of) {
    std::vector<int> elements;
    for (int i = 0; i < cover.universe_size; ++i)
      if (mask >> i & 1) elements.push_back(i);
    cover.family.push_back(std::move(elements));
    cover.set_weights.push_back(inst.w(v));
    out.representative.push_back(v);
  }
  out.table = solve_generalized(cover, cap);
  return out;
}

DecompositionGadget decomposition_gadget(const ModulatorInstance& inst, const VertexSet& l) {
  check_instance(inst);
  VertexSet rest = VertexSet::full(inst.g.n());
  for (int v : inst.m.to_vector()) rest.reset(v);
  InducedSubgraph sub = induced_subgraph(inst.g, rest);
  int nsub = sub.graph.n();
  DecompositionGadget out;
  out.apex = nsub;
  out.to_original = sub.to_original;
  Graph gg(nsub + 1);
  for (auto [u, v] : sub.graph.edges()) gg.add_edge(u, v);
  VertexSet attach(inst.g.n());
  Weight wl = 0;
  for (int v : l.to_vector()) {
    assert(inst.m.test(v));
    wl = sat_add(wl, inst.w(v));
    for (int u : inst.g.neighbors(v))
      if (!inst.m.test(u)) attach.set(u);
  }
  for (int u : attach.to_vector()) gg.add_edge(sub.from_original[u], nsub);
  out.graph = std::move(gg);
  out.weights.w.resize(nsub + 1);
  for (int i = 0; i < nsub; ++i) out.weights.w[i] = inst.w(sub.to_original[i]);
  out.weights.w[nsub] = wl;
  return out;
}

SolveResult solve_decomposition_domination(const ModulatorInstance& inst, int cap) {
  check_instance(inst);
  if (inst.m == VertexSet::full(inst.g.n())) return {VertexSet(inst.g.n()), 0};
  check_cap(inst.m.count(), cap, "modulator");

  VertexSet rest = VertexSet::full(inst.g.n());
  std::vector<int> m_vertices = inst.m.to_vector();
  for (int v : m_vertices) rest.reset(v);
  InducedSubgraph sub = induced_subgraph(inst.g, rest);

  // One shared decomposition: widen the bags of g - m by the apex, valid for
  // every gadget since the apex sits in every bag.
  RawDecomposition raw = decompose_bounded_raw(sub.graph, inst.d);
  VertexSet apex_only(sub.graph.n() + 1);
  apex_only.set(sub.graph.n());
  RawDecomposition widened = add_to_all_bags(raw, sub.graph.n() + 1, apex_only);
  DecompositionGadget base = decomposition_gadget(inst, VertexSet(inst.g.n()));
  NiceTreeDecomposition td = make_nice(widened, base.graph);

  std::optional<SolveResult> best;
  size_t subsets = size_t{1} << m_vertices.size();
  for (size_t lm = 0; lm < subsets; ++lm) {
    VertexSet l(inst.g.n());
    for (size_t i = 0; i < m_vertices.size(); ++i)
      if (lm >> i & 1) l.set(m_vertices[i]);
    DecompositionGadget gadget = decomposition_gadget(inst, l);
    SolveResult inner = solve_exact_tw(gadget.graph, gadget.weights, td);
    SolveResult lifted{VertexSet(inst.g.n()), 0};
    for (int i = 0; i < static_cast<int>(gadget.to_original.size()); ++i)
      if (inner.solution.test(i)) lifted.solution.set(gadget.to_original[i]);
    if (inner.solution.test(gadget.apex)) lifted.solution |= l;
    lifted.weight = inst.w.total(lifted.solution);
    assert(lifted.weight == inner.weight);
    if (!best || lifted.weight < best->weight) best = lifted;
  }
  assert(is_dominating(inst.g, best->solution, rest));
  return *best;
}

std::pair<SolveResult, HalvesCertificate> approx2_twd(const ModulatorInstance& inst) {
  check_instance(inst);
  SolveResult s1 = solve_generalized_modulator(inst).query(inst.m);
  SolveResult s2 = solve_decomposition_domination(inst);
  SolveResult out;
  out.solution = s1.solution | s2.solution;
  out.weight = inst.w.total(out.solution);
  HalvesCertificate cert;
  cert.modulator_half = s1.weight;
  cert.rest_half = s2.weight;
  cert.verified = is_dominating(inst.g, out.solution, VertexSet::full(inst.g.n()));
  assert(cert.verified);
  return {out, cert};
}

SolveResult solve_exact_vc(const Graph& g, const WeightFn& w,
                           const std::optional<VertexSet>& cover, int cap) {
  VertexSet m(g.n());
  if (cover) {
    if (cover->universe() != g.n()) throw InputError("cover universe does not match graph");
    for (auto [u, v] : g.edges())
      if (!cover->test(u) && !cover->test(v))
        throw InputError("supplied set is not a vertex cover");
    m = *cover;
  } else {
    m = min_vertex_cover(g, g.n()).value();
  }
  check_cap(m.count(), cap, "vertex cover");

  ModulatorTable table = solve_generalized_modulator({g, w, m, 0}, cap);
  std::vector<VertexSet> closed = closed_neighborhoods(g);
  std::vector<int> m_vertices = m.to_vector();
  VertexSet outside = VertexSet::full(g.n());
  for (int v : m_vertices) outside.reset(v);
  std::vector<int> outside_v = outside.to_vector();

  std::optional<SolveResult> best;
  size_t subsets = size_t{1} << m_vertices.size();
  for (size_t am = 0; am < subsets; ++am) {
    // The subset of the cover in the solution, completed by the independent
    // vertices it leaves undominated.
    VertexSet hat(g.n());
    VertexSet dominated(g.n());
    for (size_t i = 0; i < m_vertices.size(); ++i)
      if (am >> i & 1) {
        hat.set(m_vertices[i]);
        dominated |= closed[m_vertices[i]];
      }
    for (int v : outside_v)
      if (!dominated.test(v)) hat.set(v);
    VertexSet reach(g.n());
    for (int v : hat.to_vector()) reach |= closed[v];
    VertexSet leftover = m;
    for (int v : m_vertices)
      if (reach.test(v)) leftover.reset(v);
    SolveResult fill = table.query(leftover);
    SolveResult cand{hat | fill.solution, 0};
    cand.weight = w.total(cand.solution);
    if (!best || cand.weight < best->weight) best = cand;
  }
  assert(is_dominating(g, best->solution, VertexSet::full(g.n())));
  return *best;
}

VertexSet find_modulator(const Graph& g, int d) {
  if (d < 0) throw InputError("treewidth bound must be nonnegative");
  int n = g.n();
  if (d == 0) return min_vertex_cover(g, n).value();
  if (n > 20)
    throw ResourceError("modulator search is capped at 20 vertices; supply one explicitly");
  for (int k = 0; k <= n; ++k) {
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      VertexSet keep = VertexSet::full(n);
      VertexSet m(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) {
          keep.reset(v);
          m.set(v);
        }
      if (width_at_most(induced_subgraph(g, keep).graph, d)) return m;
    }
  }
  return VertexSet::full(n);
}

}  // namespace domsetkit
