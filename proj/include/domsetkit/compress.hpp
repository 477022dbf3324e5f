#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "domsetkit/graph.hpp"
#include "domsetkit/oracle.hpp"

namespace domsetkit {

// Dominating-set instance with an exempt set: vertices in `w` need no
// dominator themselves but may still serve as dominators.
struct RdsInstance {
  Graph g;
  VertexSet w;
};

// One reduction event, in the vertex ids of the instance the reduction chain
// started from. A solution of the reduced instance plus every step's
// `solution` vertices plus `delta` extra vertices (placed by lift_solution)
// reaches the optimum of the starting instance.
struct TraceStep {
  std::string rule;
  std::vector<int> removed_vertices;
  std::vector<std::pair<int, int>> removed_edges;
  std::vector<std::pair<int, int>> added_edges;
  std::vector<int> solution;   // vertices forced into the partial solution
  std::vector<int> exempted;   // vertices that joined w
  std::vector<int> unexempted; // vertices that left w (always removed ones)
  std::vector<int> segment;    // rewrite-specific vertex chain
  Weight delta = 0;
};

// Result of a reduction chain. `inst` is a compact instance; to_original maps
// its ids back. optimum(start) == |solution| + delta + optimum(inst), and
// when delta == 0 and every step is a forced-vertex or drop step, `solution`
// united with any minimum solution of `inst` is minimum for the start.
struct Reduced {
  RdsInstance inst;
  std::vector<int> to_original;
  VertexSet solution;
  Weight delta = 0;
  std::vector<TraceStep> trace;
};

// Replays the trace backwards, turning a minimum solution of r.inst into a
// minimum solution of the starting instance. The shrink rewrites place their
// extra vertex depending on how the given solution covers the seam.
VertexSet lift_solution(const RdsInstance& original, const Reduced& r,
                        const VertexSet& reduced_solution);

void write_trace_jsonl(std::ostream& os, const std::vector<TraceStep>& trace);

// ---- low-degree elimination and the cactus/kernel split ----

enum class EliminationOrder { Ascending, Descending };

// Repeatedly removes vertices of degree <= 2: leaves record a bridge chain,
// parallel pairs record the collapsed cycle at the surviving endpoint, and
// degree-2 vertices splice their two edges into one. The surviving kernel
// has minimum degree 3 (or is empty) and at most 2k vertices / 3k edges for
// k the feedback edge number.
struct EliminationResult {
  VertexSet kernel_vertices;
  std::vector<std::pair<int, int>> kernel_edges;   // parallel edges possible
  std::vector<std::vector<int>> kernel_paths;      // per kernel edge: vertex chain a..b
  std::vector<std::vector<int>> cycles;  // collapsed cycles, front() = anchor; size 1 = bare vertex
  std::vector<std::pair<int, int>> bridges;        // original cut edges
  std::vector<int> elimination_order;
};
EliminationResult eliminate(const Graph& g, EliminationOrder order = EliminationOrder::Ascending);

// Rooted block tree of one cactus: nodes are collapsed cycles or bare
// vertices, children attach through a shared vertex or a single bridge edge.
struct CactusNode {
  std::vector<int> cycle;        // cyclic vertex order; size 1 = bare vertex
  int articulation = -1;         // vertex of `cycle` facing the parent (root: the cactus root)
  bool edge_attached = false;
  int parent_contact = -1;       // parent-side bridge endpoint when edge_attached
  int parent = -1;
  std::vector<int> children;
};
struct CactusTree {
  int root_vertex = -1;
  int root = -1;
  std::vector<CactusNode> nodes;
  std::vector<int> postorder;    // children before parents
};

// Orients cycle records and bridges of one cactus into a tree rooted at the
// node holding root_vertex (a bare node is synthesized when none does).
// Single vertices appear as one-element cycles.
CactusTree build_cactus_tree(const std::vector<std::vector<int>>& cycles,
                             const std::vector<std::pair<int, int>>& bridges,
                             int root_vertex);

// Partition of the edges into kernel paths and a cactus forest. Every cactus
// shares exactly one vertex (its root) with the kernel span; components that
// eliminate completely become one cactus rooted at the last vertex standing.
struct CactusKernelDecomposition {
  EliminationResult elim;
  int k = 0;                     // feedback edge number
  VertexSet kernel_span;         // kernel vertices, path interiors, cactus roots
  VertexSet cactus_span;
  std::vector<CactusTree> cacti; // ordered by root vertex
};
CactusKernelDecomposition cactus_kernel(const Graph& g);

// ---- single reductions ----

// Degree <= 1 vertex v: exempt v is dropped; otherwise its neighbor (or v
// itself when isolated) is forced into the solution and the neighborhood of
// the forced vertex becomes exempt.
Reduced leaf_reduce(const RdsInstance& inst, int v);

// Consumes the pendant path hanging at `leaf` by iterated leaf reductions.
Reduced dangling_path_reduce(const RdsInstance& inst, int leaf);

// Exact minimum for a path graph: sweep from one end, covering each exposed
// vertex by the next one along the path.
VertexSet path_dominate(const RdsInstance& inst);

// Exact minimum on a cycle or path c with forced set u, exempt set w and
// pivot t. Case 1 forces t into the solution; case 2 forbids t and exempts
// it. Both drop every vertex of an exempt-to-exempt edge next to the forced
// closure and solve the remaining path pieces.
VertexSet rdsc_solve(const Graph& c, const VertexSet& u, const VertexSet& w, int t,
                     int which_case);

// Contracts a chain u-u1-u2-u3-v whose interior is plain (not exempt, degree
// 2) into an edge (u,v). Shrinks the optimum by one; the lift re-inserts u1,
// u2 or u3 depending on which side the reduced solution covers.
Reduced wfree_path_reduce(const RdsInstance& inst, const std::array<int, 5>& segment);

// Rewrites every maximal induced path of more than 9 edges: exempt-exempt
// edges are dropped (the halves dangle and are consumed), plain runs of 3
// are contracted, and three consecutive interior exempt vertices are
// squeezed by the gap pattern between them.
Reduced induced_path_reduce(const RdsInstance& inst);

// Partial solution for a cactus h hanging off a host graph at `root`: the
// result dominates all of h except possibly the root, and contains the root
// whenever some minimum choice does.
VertexSet dominate_dangling_cactus(const Graph& h, int root);

// Full pipeline: per-cactus domination, kernel marking, flat cleanups and
// the long-path rewrites. The reduced instance keeps at most 2k vertices of
// degree > 2, 26k vertices and 27k edges.
Reduced compress(const Graph& g);

// Exact minimum by subset enumeration; alive vertex cap 22.
OracleResult rds_brute(const RdsInstance& inst);

}  // namespace domsetkit
