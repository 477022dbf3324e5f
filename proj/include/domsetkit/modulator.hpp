#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domsetkit/decomp.hpp"
#include "domsetkit/dp_tw.hpp"
#include "domsetkit/graph.hpp"
#include "domsetkit/setcover.hpp"

namespace domsetkit {

// Graph with a deletion set m whose removal leaves treewidth <= d.
struct ModulatorInstance {
  Graph g;
  WeightFn w;
  VertexSet m;
  int d = 0;
};

// Answer table of the modulator-domination reduction: for every A subset of
// the modulator, a minimum-weight set of graph vertices dominating A.
struct ModulatorTable {
  std::vector<int> m_vertices;      // ascending modulator vertex ids
  std::vector<int> representative;  // per family set: its witness vertex
  CoverTable table;
  int n = 0;

  SolveResult query(const VertexSet& a) const;  // a subset of the modulator
};

// Set-cover reduction over the closed neighborhoods restricted to the
// modulator, deduplicated to a minimum-weight representative per distinct
// neighborhood trace. Throws ResourceError when |m| exceeds the cap.
ModulatorTable solve_generalized_modulator(const ModulatorInstance& inst, int cap = 25);

// Apex-gadget graph for one modulator subset: the graph minus the modulator,
// plus a vertex standing in for the subset, adjacent to the subset's
// neighbors outside the modulator and priced at the subset's weight.
struct DecompositionGadget {
  Graph graph;
  WeightFn weights;
  int apex = -1;
  std::vector<int> to_original;  // gadget id -> original id; apex excluded
};
DecompositionGadget decomposition_gadget(const ModulatorInstance& inst, const VertexSet& l);

// Minimum-weight set dominating every vertex outside the modulator: solves
// each subset's gadget exactly on one shared widened decomposition of
// g - m and keeps the best un-gadgeted solution.
SolveResult solve_decomposition_domination(const ModulatorInstance& inst, int cap = 25);

struct HalvesCertificate {
  Weight modulator_half = 0;  // optimal weight dominating m; lower bound
  Weight rest_half = 0;       // likewise for the rest of the graph
  bool verified = false;
};

// Two-sided pipeline on the modulator split: dominate m via the set-cover
// reduction, dominate the rest via the gadget solver, return the union.
// Weight <= 2 * OPT.
std::pair<SolveResult, HalvesCertificate> approx2_twd(const ModulatorInstance& inst);

// Exact minimum-weight dominating set driven by a vertex cover: enumerate the
// cover's subsets, complete each with the undominated independent vertices,
// and finish the leftover cover vertices from the modulator table.
SolveResult solve_exact_vc(const Graph& g, const WeightFn& w,
                           const std::optional<VertexSet>& cover = std::nullopt, int cap = 25);

// Smallest deletion set leaving treewidth <= d: exact vertex cover for d = 0,
// exhaustive search (n <= 20) otherwise.
VertexSet find_modulator(const Graph& g, int d);

}  // namespace domsetkit
