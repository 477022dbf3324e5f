#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit {

// One parsed graph file. Vertex ids are 0-based in memory, 1-based on disk.
struct Instance {
  Graph graph;
  WeightFn weights;
  std::optional<VertexSet> modulator;  // `m` lines
  std::optional<VertexSet> exempt;     // `x` lines (vertices not requiring domination)
  std::optional<VertexSet> solution;   // `s` lines
  std::vector<int> orig_ids;           // `c map` lines on compressed files, else empty
};

Instance read_instance(std::istream& in, const std::string& source_name = "<stream>");
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

// Solution file: whitespace-separated 1-based ids, `s` prefixes and `c`
// comments allowed.
VertexSet read_solution(std::istream& in, int n, const std::string& source_name = "<stream>");
VertexSet read_solution_file(const std::string& path, int n);

}  // namespace domsetkit
