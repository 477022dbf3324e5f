#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "domsetkit/approx_k.hpp"
#include "domsetkit/compress.hpp"
#include "domsetkit/decomp.hpp"
#include "domsetkit/dp_tw.hpp"
#include "domsetkit/errors.hpp"
#include "domsetkit/fes.hpp"
#include "domsetkit/generators.hpp"
#include "domsetkit/graph.hpp"
#include "domsetkit/io.hpp"
#include "domsetkit/modulator.hpp"
#include "domsetkit/oracle.hpp"
#include "domsetkit/setcover.hpp"

namespace py = pybind11;
using namespace domsetkit;

namespace {

VertexSet to_set(int n, const std::vector<int>& ids) {
  VertexSet s(n);
  for (int v : ids) {
    if (v < 0 || v >= n) {
      throw InputError("vertex id " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    }
    s.set(v);
  }
  return s;
}

VertexSet to_set_or_full(const Graph& g, const std::optional<std::vector<int>>& ids) {
  return ids ? to_set(g.n(), *ids) : VertexSet::full(g.n());
}

VertexSet to_set_or_empty(const Graph& g, const std::optional<std::vector<int>>& ids) {
  return ids ? to_set(g.n(), *ids) : VertexSet(g.n());
}

WeightFn to_weights(const Graph& g, const std::optional<std::vector<Weight>>& w) {
  if (!w) return WeightFn::unit();
  if (static_cast<int>(w->size()) != g.n()) {
    throw InputError("weights must list one value per vertex");
  }
  return WeightFn{*w};
}

NiceTreeDecomposition pick_td(const Graph& g, int d, const std::optional<RawDecomposition>& td) {
  return td ? make_nice(*td, g) : decompose_bounded(g, d);
}

py::dict trace_step_dict(const TraceStep& st) {
  py::dict d;
  d["rule"] = st.rule;
  d["removed_vertices"] = st.removed_vertices;
  d["removed_edges"] = st.removed_edges;
  d["added_edges"] = st.added_edges;
  d["solution"] = st.solution;
  d["exempted"] = st.exempted;
  d["unexempted"] = st.unexempted;
  d["segment"] = st.segment;
  d["delta"] = st.delta;
  return d;
}

// compress() plus the starting graph, so lifting stays a method call.
struct CompressHandle {
  Graph original;
  Reduced r;
};

}  // namespace

PYBIND11_MODULE(_domsetkit, m) {
  m.doc() = "Parameterized dominating-set solvers: treewidth DP, modulator and "
            "feedback-edge pipelines, compression with solution lifting.";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ResourceError>(m, "ResourceError");

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, bool>(), py::arg("n"), py::arg("allow_multi") = false)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, int v) {
             if (v < 0 || v >= g.n()) throw InputError("vertex id out of range");
             return g.neighbors(v);
           },
           py::arg("v"))
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("has_parallel_edges", &Graph::has_parallel_edges)
      .def("simplified", &Graph::simplified)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.n() << ", m=" << g.m() << ")";
        return os.str();
      });

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("solution",
                             [](const SolveResult& r) { return r.solution.to_vector(); })
      .def_readonly("weight", &SolveResult::weight)
      .def("__repr__", [](const SolveResult& r) {
        std::ostringstream os;
        os << "SolveResult(size=" << r.solution.count() << ", weight=" << r.weight << ")";
        return os.str();
      });

  py::class_<RawDecomposition>(m, "TreeDecomposition")
      .def_property_readonly("width", &RawDecomposition::width)
      .def_property_readonly("bags",
                             [](const RawDecomposition& td) {
                               std::vector<std::vector<int>> out;
                               out.reserve(td.bags.size());
                               for (const auto& b : td.bags) out.push_back(b.to_vector());
                               return out;
                             })
      .def_readonly("tree_edges", &RawDecomposition::tree_edges)
      .def("__repr__", [](const RawDecomposition& td) {
        std::ostringstream os;
        os << "TreeDecomposition(bags=" << td.bags.size() << ", width=" << td.width() << ")";
        return os.str();
      });

  py::class_<Approx2Certificate>(m, "Approx2Certificate")
      .def_readonly("half1", &Approx2Certificate::half1)
      .def_readonly("half2", &Approx2Certificate::half2)
      .def_readonly("slack", &Approx2Certificate::slack)
      .def_readonly("verified", &Approx2Certificate::verified);

  py::class_<HalvesCertificate>(m, "HalvesCertificate")
      .def_readonly("modulator_half", &HalvesCertificate::modulator_half)
      .def_readonly("rest_half", &HalvesCertificate::rest_half)
      .def_readonly("verified", &HalvesCertificate::verified);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("weight", &OracleResult::weight)
      .def_property_readonly("witness",
                             [](const OracleResult& r) -> std::optional<std::vector<int>> {
                               if (!r.witness) return std::nullopt;
                               return r.witness->to_vector();
                             })
      .def_readonly("optimum_count", &OracleResult::optimum_count)
      .def("feasible", &OracleResult::feasible);

  py::class_<TradeoffResult>(m, "TradeoffResult")
      .def_property_readonly("solution",
                             [](const TradeoffResult& r) { return r.solution.to_vector(); })
      .def_readonly("size", &TradeoffResult::size)
      .def_property_readonly("best_seed",
                             [](const TradeoffResult& r) { return r.best_seed.to_vector(); })
      .def_readonly("subset_bound", &TradeoffResult::subset_bound)
      .def_readonly("iterations", &TradeoffResult::iterations)
      .def_readonly("early_exit", &TradeoffResult::early_exit)
      .def_readonly("trace", &TradeoffResult::trace);

  py::class_<FesModulatorResult>(m, "FesModulator")
      .def_property_readonly("modulator",
                             [](const FesModulatorResult& r) { return r.m.to_vector(); })
      .def_readonly("feedback_edges", &FesModulatorResult::f)
      .def_readonly("parent", &FesModulatorResult::parent)
      .def_readonly("removal_order", &FesModulatorResult::removal_order)
      .def_readonly("deactivated", &FesModulatorResult::deactivated);

  py::class_<CompressHandle>(m, "Compression")
      .def_property_readonly("graph", [](const CompressHandle& c) { return c.r.inst.g; })
      .def_property_readonly("exempt",
                             [](const CompressHandle& c) { return c.r.inst.w.to_vector(); })
      .def_property_readonly("forced",
                             [](const CompressHandle& c) { return c.r.solution.to_vector(); })
      .def_property_readonly("to_original",
                             [](const CompressHandle& c) { return c.r.to_original; })
      .def_property_readonly("delta", [](const CompressHandle& c) { return c.r.delta; })
      .def_property_readonly("rules",
                             [](const CompressHandle& c) {
                               std::vector<std::string> out;
                               out.reserve(c.r.trace.size());
                               for (const auto& st : c.r.trace) out.push_back(st.rule);
                               return out;
                             })
      .def_property_readonly("trace",
                             [](const CompressHandle& c) {
                               py::list out;
                               for (const auto& st : c.r.trace) out.append(trace_step_dict(st));
                               return out;
                             })
      .def("lift",
           [](const CompressHandle& c, const std::vector<int>& reduced_solution) {
             RdsInstance original{c.original, VertexSet(c.original.n())};
             VertexSet s = to_set(c.r.inst.g.n(), reduced_solution);
             return lift_solution(original, c.r, s).to_vector();
           },
           py::arg("reduced_solution"),
           "Replay the reduction trace backwards on a solution of the reduced instance.")
      .def("__repr__", [](const CompressHandle& c) {
        std::ostringstream os;
        os << "Compression(n=" << c.r.inst.g.n() << ", forced=" << c.r.solution.count()
           << ", delta=" << c.r.delta << ")";
        return os.str();
      });

  m.def("is_dominating",
        [](const Graph& g, const std::vector<int>& solution,
           const std::optional<std::vector<int>>& targets) {
          return is_dominating(g, to_set(g.n(), solution), to_set_or_full(g, targets));
        },
        py::arg("graph"), py::arg("solution"), py::arg("targets") = std::nullopt);

  m.def("decompose",
        [](const Graph& g, int d) { return decompose_bounded_raw(g, d); },
        py::arg("graph"), py::arg("d") = 3,
        "Tree decomposition of width <= d when attainable by the bounded constructors.");

  m.def("verify_decomposition",
        [](const RawDecomposition& td, const Graph& g) {
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& issue : verify_decomposition(td, g)) {
            out.emplace_back(issue.axiom, issue.detail);
          }
          return out;
        },
        py::arg("td"), py::arg("graph"));

  m.def("solve_exact_tw",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights, int d,
           const std::optional<RawDecomposition>& td) {
          return solve_exact_tw(g, to_weights(g, weights), pick_td(g, d, td));
        },
        py::arg("graph"), py::arg("weights") = std::nullopt, py::arg("d") = 3,
        py::arg("td") = std::nullopt,
        "Minimum-weight dominating set by dynamic programming over a tree decomposition.");

  m.def("solve_half_width",
        [](const Graph& g, const std::vector<int>& targets,
           const std::optional<std::vector<Weight>>& weights, int d,
           const std::optional<RawDecomposition>& td) {
          return solve_half_width(g, to_weights(g, weights), pick_td(g, d, td),
                                  to_set(g.n(), targets));
        },
        py::arg("graph"), py::arg("targets"), py::arg("weights") = std::nullopt,
        py::arg("d") = 3, py::arg("td") = std::nullopt,
        "Minimum-weight set dominating only the given targets.");

  m.def("approx2_tw",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights, int d,
           const std::optional<RawDecomposition>& td) {
          return approx2_tw(g, to_weights(g, weights), pick_td(g, d, td));
        },
        py::arg("graph"), py::arg("weights") = std::nullopt, py::arg("d") = 3,
        py::arg("td") = std::nullopt,
        "Factor-2 approximation from two half-width solves; returns (result, certificate).");

  m.def("approx2_twd",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights, int d,
           const std::optional<std::vector<int>>& modulator) {
          ModulatorInstance inst{g, to_weights(g, weights), VertexSet(g.n()), d};
          inst.m = modulator ? to_set(g.n(), *modulator) : find_modulator(g, d);
          return approx2_twd(inst);
        },
        py::arg("graph"), py::arg("weights") = std::nullopt, py::arg("d") = 3,
        py::arg("modulator") = std::nullopt,
        "Factor-2 approximation on a treewidth-d modulator split; returns (result, certificate).");

  m.def("solve_exact_vc",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights,
           const std::optional<std::vector<int>>& cover, int cap) {
          std::optional<VertexSet> c;
          if (cover) c = to_set(g.n(), *cover);
          return solve_exact_vc(g, to_weights(g, weights), c, cap);
        },
        py::arg("graph"), py::arg("weights") = std::nullopt, py::arg("cover") = std::nullopt,
        py::arg("cap") = 25,
        "Exact minimum-weight dominating set parameterized by a vertex cover.");

  m.def("solve_exact_fes",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights) {
          return solve_exact_fes(g, to_weights(g, weights));
        },
        py::arg("graph"), py::arg("weights") = std::nullopt,
        "Exact minimum-weight dominating set parameterized by the feedback edge number.");

  m.def("greedy_dominating",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights) {
          return greedy_dominating(g, to_weights(g, weights));
        },
        py::arg("graph"), py::arg("weights") = std::nullopt);

  m.def("approx_tradeoff",
        [](const Graph& g, std::pair<int, int> alpha, int k, int max_subset) {
          return approx_tradeoff(g, TradeoffConfig{alpha.first, alpha.second, k, max_subset});
        },
        py::arg("graph"), py::arg("alpha") = std::make_pair(0, 1), py::arg("k") = 0,
        py::arg("max_subset") = 8,
        "Seeded greedy domination enumerating seeds up to floor(alpha*k)+1 vertices.");

  m.def("fes_modulator", &fes_modulator, py::arg("graph"),
        "Deletion set of at most floor(fes/2) vertices leaving a cactus.");

  m.def("find_modulator",
        [](const Graph& g, int d) { return find_modulator(g, d).to_vector(); },
        py::arg("graph"), py::arg("d"));

  m.def("feedback_edge_number", &feedback_edge_number, py::arg("graph"));
  m.def("is_cactus", &is_cactus, py::arg("graph"));

  m.def("compress",
        [](const Graph& g) { return CompressHandle{g, compress(g)}; },
        py::arg("graph"),
        "Exhaustively apply the optimum-preserving reduction rules.");

  m.def("brute_min_dominating",
        [](const Graph& g, const std::optional<std::vector<Weight>>& weights,
           const std::optional<std::vector<int>>& targets,
           const std::optional<std::vector<int>>& forced,
           const std::optional<std::vector<int>>& forbidden) {
          return brute_min_dominating(g, to_weights(g, weights), to_set_or_full(g, targets),
                                      to_set_or_empty(g, forced), to_set_or_empty(g, forbidden));
        },
        py::arg("graph"), py::arg("weights") = std::nullopt, py::arg("targets") = std::nullopt,
        py::arg("forced") = std::nullopt, py::arg("forbidden") = std::nullopt,
        "Exhaustive reference solver, n <= 22.");

  m.def("gen_random", &gen_random, py::arg("n"), py::arg("edge_probability"), py::arg("seed"));
  m.def("gen_cactus", &gen_cactus, py::arg("n"), py::arg("seed"));
  m.def("gen_from_hitting_set", &gen_from_hitting_set, py::arg("universe_size"),
        py::arg("family"),
        "Gadget whose minimum dominating set is the minimum hitting set plus one.");
  m.def("gen_from_set_cover", &gen_from_set_cover, py::arg("universe_size"), py::arg("family"),
        "Gadget whose minimum dominating set is the minimum set cover plus one.");
  m.def("gen_weights",
        [](int n, Weight lo, Weight hi, uint64_t seed) { return gen_weights(n, lo, hi, seed).w; },
        py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("seed"));

  m.def("read_instance",
        [](const std::string& path) {
          Instance inst = read_instance_file(path);
          py::dict out;
          out["graph"] = inst.graph;
          out["weights"] = inst.weights.is_unit() ? py::object(py::none())
                                                  : py::cast(inst.weights.w);
          out["exempt"] = inst.exempt ? py::cast(inst.exempt->to_vector())
                                      : py::object(py::none());
          out["modulator"] = inst.modulator ? py::cast(inst.modulator->to_vector())
                                            : py::object(py::none());
          out["solution"] = inst.solution ? py::cast(inst.solution->to_vector())
                                          : py::object(py::none());
          out["orig_ids"] = inst.orig_ids;
          return out;
        },
        py::arg("path"));

  m.def("write_instance",
        [](const std::string& path, const Graph& g,
           const std::optional<std::vector<Weight>>& weights,
           const std::optional<std::vector<int>>& exempt,
           const std::optional<std::vector<int>>& solution) {
          Instance inst;
          inst.graph = g;
          inst.weights = to_weights(g, weights);
          if (exempt) inst.exempt = to_set(g.n(), *exempt);
          if (solution) inst.solution = to_set(g.n(), *solution);
          write_instance_file(path, inst);
        },
        py::arg("path"), py::arg("graph"), py::arg("weights") = std::nullopt,
        py::arg("exempt") = std::nullopt, py::arg("solution") = std::nullopt);
}
