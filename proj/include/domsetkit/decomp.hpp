#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit {

enum class NodeType { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeType type = NodeType::Leaf;
  int vertex = -1;  // introduced / forgotten vertex
  VertexSet bag;
  int child = -1;
  int child2 = -1;  // Join only
};

// Rooted nice tree decomposition. Children precede parents in `nodes`, so an
// ascending scan is a valid bottom-up order; the root is nodes.back() and has
// an empty bag, as do leaves.
struct NiceTreeDecomposition {
  int n = 0;  // graph vertex count
  int width = -1;
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
};

// Unrooted decomposition as parsed/constructed; bag ids are indices.
struct RawDecomposition {
  int n = 0;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

struct ValidationIssue {
  std::string axiom;
  std::string detail;
};

// Tree-decomposition axioms: tree shape, vertex coverage, edge coverage,
// connected per-vertex occurrence. Empty report = valid.
std::vector<ValidationIssue> verify_decomposition(const RawDecomposition& td, const Graph& g);
// Additionally checks nice-node structure (types, bag deltas, empty root/leaves).
std::vector<ValidationIssue> verify_nice(const NiceTreeDecomposition& td, const Graph& g);

// Conversion to nice form of the same width. Throws ValidationError naming
// the violated axiom if the input decomposition is invalid.
NiceTreeDecomposition make_nice(const RawDecomposition& raw, const Graph& g);

// Bounded-width construction. d <= 2: greedy bounded elimination, complete
// for tw(g) <= d, throws WidthExceededError otherwise. d >= 3: exact
// branch-and-bound elimination search for n <= 25, else min-fill heuristic;
// the returned width is whatever was achieved.
RawDecomposition decompose_bounded_raw(const Graph& g, int d);
NiceTreeDecomposition decompose_bounded(const Graph& g, int d);

struct BalancedPartition {
  VertexSet v1, v2;
  int slack = 0;  // c: max over nodes/sides of |bag ∩ V_i| - ceil(width/2)
};

// Partition of V(G) with every bag split near-evenly between the sides.
// Greedy by topmost-bag order, then local repair, then exact search at small
// n; throws ValidationError if the achieved slack exceeds max_slack.
BalancedPartition balanced_partition(const Graph& g, const NiceTreeDecomposition& td,
                                     int max_slack = 2);

// Bag-id remap helpers used by the modulator pipelines.
RawDecomposition remap_decomposition(const RawDecomposition& td,
                                     const std::vector<int>& new_id_of, int new_n);
RawDecomposition add_to_all_bags(const RawDecomposition& td, int new_n, const VertexSet& extra);

// PACE-style format: `s td <#bags> <width+1> <n>`, `b <id> <v...>`, then one
// `<a> <b>` line per tree edge; `c` comments ignored.
RawDecomposition read_td(std::istream& in, const std::string& source = "<stream>");
RawDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const RawDecomposition& td);
void write_td_file(const std::string& path, const RawDecomposition& td);

}  // namespace domsetkit
