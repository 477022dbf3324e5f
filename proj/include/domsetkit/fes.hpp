#pragma once

#include <utility>
#include <vector>

#include "domsetkit/dp_tw.hpp"
#include "domsetkit/graph.hpp"

namespace domsetkit {

// Output of the feedback-edge modulator construction: deleting `m` leaves a
// cactus, so tw(g - m) <= 2, and |m| <= floor(|f| / 2).
struct FesModulatorResult {
  VertexSet m;
  // Non-tree edges of the DFS forest as (top, bottom), the top being the
  // endpoint closer to its component root. |f| = m - n + #components.
  std::vector<std::pair<int, int>> f;
  // DFS forest, parent id per vertex; -1 at component roots.
  std::vector<int> parent;
  // Vertices of m in the order the scan deleted them.
  std::vector<int> removal_order;
  // deactivated[i]: indices into f of the edges that lie on a cycle with the
  // first i deletions applied but on none with the first i + 1. Every entry
  // holds at least two indices and no index appears twice overall.
  std::vector<std::vector<int>> deactivated;
};

// Builds a DFS forest (smallest-id root per component, children ascending)
// and scans it in preorder while tracking at most one non-tree edge whose
// span the traversal is currently descending; a vertex is deleted when it is
// the top of two non-tree edges, or the top of one while another is being
// tracked. The deactivation log is reconstructed afterwards by cycle checks
// against deletion prefixes; the scan itself never tracks edge liveness.
FesModulatorResult fes_modulator(const Graph& g);

// True iff every biconnected component is a single edge or a single cycle,
// i.e. no two simple cycles share more than one vertex.
bool is_cactus(const Graph& g);

// Exact minimum-weight dominating set: width-2 decomposition of g minus the
// feedback-edge modulator, widened by the modulator, then the tree DP.
// Modulators above 25 vertices raise ResourceError.
SolveResult solve_exact_fes(const Graph& g, const WeightFn& w);

}  // namespace domsetkit
