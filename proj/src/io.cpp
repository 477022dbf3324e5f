#include "domsetkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "domsetkit/errors.hpp"

namespace domsetkit {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

int parse_vertex(const std::string& source, int line, const std::string& tok, int n) {
  int v;
  try {
    size_t pos;
    v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    fail(source, line, "expected vertex id, got '" + tok + "'");
  }
  if (v < 1 || v > n) fail(source, line, "vertex id " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

}  // namespace

Instance read_instance(std::istream& in, const std::string& source) {
  Instance inst;
  bool have_header = false;
  int declared_m = 0, seen_edges = 0;
  int n = 0;
  int lineno = 0;
  std::string line;
  auto ensure_header = [&](const char* kind) {
    if (!have_header) fail(source, lineno, std::string(kind) + " line before 'p ds' header");
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "c") {
      std::string sub;
      if (ss >> sub && sub == "map") {
        int nu, old;
        if (!(ss >> nu >> old)) fail(source, lineno, "malformed 'c map' line");
        if (nu < 1) fail(source, lineno, "bad mapped id");
        if (static_cast<int>(inst.orig_ids.size()) < nu) inst.orig_ids.resize(nu, -1);
        inst.orig_ids[nu - 1] = old - 1;
      }
      continue;
    }
    if (tag == "p") {
      if (have_header) fail(source, lineno, "duplicate 'p' line");
      std::string prob;
      int pm;
      if (!(ss >> prob >> n >> pm) || prob != "ds")
        fail(source, lineno, "expected 'p ds <n> <m>'");
      if (n < 0 || pm < 0) fail(source, lineno, "negative size in header");
      inst.graph = Graph(n);
      declared_m = pm;
      have_header = true;
      continue;
    }
    if (tag == "e") {
      ensure_header("edge");
      std::string a, b;
      if (!(ss >> a >> b)) fail(source, lineno, "expected 'e <u> <v>'");
      int u = parse_vertex(source, lineno, a, n);
      int v = parse_vertex(source, lineno, b, n);
      try {
        inst.graph.add_edge(u, v);
      } catch (const InputError& e) {
        fail(source, lineno, e.what());
      }
      ++seen_edges;
      continue;
    }
    if (tag == "w") {
      ensure_header("weight");
      std::string a;
      long long wt;
      if (!(ss >> a >> wt)) fail(source, lineno, "expected 'w <v> <weight>'");
      int v = parse_vertex(source, lineno, a, n);
      if (wt < 0) fail(source, lineno, "weights must be nonnegative");
      if (inst.weights.w.empty()) inst.weights.w.assign(n, 1);
      inst.weights.w[v] = wt;
      continue;
    }
    if (tag == "m" || tag == "x" || tag == "s") {
      ensure_header("vertex list");
      std::optional<VertexSet>& dst =
          tag == "m" ? inst.modulator : (tag == "x" ? inst.exempt : inst.solution);
      if (!dst) dst = VertexSet(n);
      std::string a;
      while (ss >> a) dst->set(parse_vertex(source, lineno, a, n));
      continue;
    }
    fail(source, lineno, "unknown line tag '" + tag + "'");
  }
  if (!have_header) fail(source, lineno, "missing 'p ds' header");
  if (seen_edges != declared_m)
    fail(source, lineno,
         "header declares " + std::to_string(declared_m) + " edges, file has " +
             std::to_string(seen_edges));
  for (int v : inst.orig_ids)
    if (v < 0) fail(source, lineno, "incomplete 'c map' id mapping");
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_instance(in, path);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const Graph& g = inst.graph;
  for (size_t i = 0; i < inst.orig_ids.size(); ++i)
    out << "c map " << (i + 1) << ' ' << (inst.orig_ids[i] + 1) << '\n';
  out << "p ds " << g.n() << ' ' << g.m() << '\n';
  auto es = g.edges();
  std::sort(es.begin(), es.end());
  for (auto [u, v] : es) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  if (!inst.weights.is_unit())
    for (int v = 0; v < g.n(); ++v) out << "w " << (v + 1) << ' ' << inst.weights(v) << '\n';
  auto emit_list = [&](const char* tag, const std::optional<VertexSet>& s) {
    if (!s) return;
    out << tag;
    s->for_each([&](int v) { out << ' ' << (v + 1); });
    out << '\n';
  };
  emit_list("m", inst.modulator);
  emit_list("x", inst.exempt);
  emit_list("s", inst.solution);
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_instance(out, inst);
}

VertexSet read_solution(std::istream& in, int n, const std::string& source) {
  VertexSet s(n);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    bool first = true;
    while (ss >> tok) {
      if (first && (tok == "c")) break;
      if (first && tok == "s") {
        first = false;
        continue;
      }
      first = false;
      s.set(parse_vertex(source, lineno, tok, n));
    }
  }
  return s;
}

VertexSet read_solution_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_solution(in, n, path);
}

}  // namespace domsetkit
