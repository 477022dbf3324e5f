#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

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
#include "domsetkit/report.hpp"
#include "domsetkit/setcover.hpp"

namespace {

using namespace domsetkit;
namespace fs = std::filesystem;

std::vector<int> one_based(const VertexSet& s) {
  std::vector<int> out;
  s.for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << text << '\n';
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct AlgoOptions {
  std::string algo = "tw-exact";
  int d = 3;
  std::string td_path;
  std::string alpha = "0";
  int k = 0;
  int max_subset = 8;
};

struct AlgoOutcome {
  SolveResult res;
  std::map<std::string, long long> parameters;
  VertexSet modulator;
  bool has_modulator = false;
};

std::pair<int, int> parse_alpha(const std::string& s) {
  try {
    size_t pos = s.find('/');
    if (pos == std::string::npos) return {std::stoi(s), 1};
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
  } catch (const std::exception&) {
    throw InputError("alpha must be given as p or p/q");
  }
}

AlgoOutcome dispatch_algo(const Instance& inst, const AlgoOptions& opt) {
  const Graph& g = inst.graph;
  const WeightFn& w = inst.weights;
  AlgoOutcome out;
  out.modulator = VertexSet(g.n());
  if (opt.algo == "tw-exact" || opt.algo == "tw-approx2") {
    NiceTreeDecomposition td = opt.td_path.empty()
                                   ? decompose_bounded(g, opt.d)
                                   : make_nice(read_td_file(opt.td_path), g);
    out.parameters["width"] = td.width;
    if (opt.algo == "tw-exact") {
      out.res = solve_exact_tw(g, w, td);
    } else {
      auto [res, cert] = approx2_tw(g, w, td);
      out.res = res;
      out.parameters["slack"] = cert.slack;
      out.parameters["half1"] = cert.half1;
      out.parameters["half2"] = cert.half2;
    }
  } else if (opt.algo == "twd-approx2") {
    VertexSet m = inst.modulator ? *inst.modulator : find_modulator(g, opt.d);
    auto [res, cert] = approx2_twd({g, w, m, opt.d});
    out.res = res;
    out.modulator = m;
    out.has_modulator = true;
    out.parameters["d"] = opt.d;
    out.parameters["modulator_size"] = static_cast<long long>(m.count());
    out.parameters["half1"] = cert.modulator_half;
    out.parameters["half2"] = cert.rest_half;
  } else if (opt.algo == "vc-exact") {
    VertexSet cover = inst.modulator ? *inst.modulator : find_modulator(g, 0);
    out.res = solve_exact_vc(g, w, cover);
    out.modulator = cover;
    out.has_modulator = true;
    out.parameters["vc"] = static_cast<long long>(cover.count());
  } else if (opt.algo == "fes-exact") {
    FesModulatorResult fm = fes_modulator(g);
    out.res = solve_exact_fes(g, w);
    out.modulator = fm.m;
    out.has_modulator = true;
    out.parameters["fes"] = static_cast<long long>(fm.f.size());
    out.parameters["modulator_size"] = static_cast<long long>(fm.m.count());
  } else if (opt.algo == "greedy") {
    out.res = greedy_dominating(g, w);
  } else if (opt.algo == "tradeoff") {
    if (!w.is_unit()) throw InputError("tradeoff requires unit weights");
    auto [num, den] = parse_alpha(opt.alpha);
    TradeoffResult tr = approx_tradeoff(g, {num, den, opt.k, opt.max_subset});
    out.res.solution = tr.solution;
    out.res.weight = tr.size;
    out.parameters["k"] = opt.k;
    out.parameters["alpha_num"] = num;
    out.parameters["alpha_den"] = den;
    out.parameters["subset_bound"] = tr.subset_bound;
    out.parameters["iterations"] = static_cast<long long>(tr.iterations);
  } else {
    throw InputError("unknown algorithm " + opt.algo);
  }
  return out;
}

constexpr int kOracleCap = 14;

struct SolveArgs {
  std::string path;
  AlgoOptions opt;
  bool check_oracle = false;
  bool emit_modulator = false;
  std::string out;
};

int run_solve(const SolveArgs& a) {
  Instance inst = read_instance_file(a.path);
  auto t0 = std::chrono::steady_clock::now();
  AlgoOutcome oc = dispatch_algo(inst, a.opt);
  SolveReport rep;
  rep.wall_ms = elapsed_ms(t0);
  rep.algorithm = a.opt.algo;
  rep.parameters = std::move(oc.parameters);
  rep.solution = one_based(oc.res.solution);
  rep.weight = oc.res.weight;
  rep.dominating =
      is_dominating(inst.graph, oc.res.solution, VertexSet::full(inst.graph.n()));
  if (a.check_oracle) {
    if (inst.graph.n() <= kOracleCap) {
      OracleResult best = brute_min_dominating(inst.graph, inst.weights);
      rep.oracle_status = "ok";
      if (best.weight > 0)
        rep.ratio = static_cast<double>(rep.weight) / static_cast<double>(best.weight);
      else
        rep.ratio = rep.weight == 0 ? 1.0 : -1.0;
    } else {
      rep.oracle_status = "skipped: cap";
    }
  } else {
    rep.oracle_status = "off";
  }
  if (a.emit_modulator && oc.has_modulator) rep.modulator = one_based(oc.modulator);
  emit(report_to_json(rep), a.out);
  return 0;
}

void require_plain_unit(const Instance& inst, const char* verb) {
  if (inst.exempt && inst.exempt->any())
    throw InputError(std::string(verb) + " input must not carry exempt vertices");
  if (!inst.weights.is_unit())
    throw InputError(std::string(verb) + " requires unit weights");
}

int run_compress(const std::string& path, const std::string& out_dir) {
  Instance inst = read_instance_file(path);
  require_plain_unit(inst, "compress");
  const Graph& g = inst.graph;
  Reduced r = compress(g);
  fs::create_directories(out_dir);

  Instance out;
  out.graph = r.inst.g;
  out.exempt = r.inst.w;
  out.orig_ids = r.to_original;
  write_instance_file(out_dir + "/compressed.ds", out);

  std::ofstream partial(out_dir + "/partial.txt");
  if (!partial) throw InputError("cannot write " + out_dir + "/partial.txt");
  partial << 's';
  for (int v : one_based(r.solution)) partial << ' ' << v;
  partial << '\n';

  std::ofstream trace(out_dir + "/trace.jsonl");
  if (!trace) throw InputError("cannot write " + out_dir + "/trace.jsonl");
  write_trace_jsonl(trace, r.trace);

  const int k = g.m() - g.n() + component_count(g);
  int high_degree = 0;
  for (int v = 0; v < r.inst.g.n(); ++v)
    if (r.inst.g.degree(v) > 2) ++high_degree;
  nlohmann::json summary;
  summary["k"] = k;
  summary["n"] = g.n();
  summary["m"] = g.m();
  summary["reduced_n"] = r.inst.g.n();
  summary["reduced_m"] = r.inst.g.m();
  summary["exempt"] = r.inst.w.count();
  summary["forced"] = r.solution.count();
  summary["delta"] = r.delta;
  summary["high_degree"] = high_degree;
  summary["within_bounds"] =
      r.inst.g.m() <= 27 * k && r.inst.g.n() <= 26 * k && high_degree <= 2 * k;
  std::string text = summary.dump();
  emit(text, out_dir + "/summary.json");
  std::cout << text << '\n';
  return 0;
}

int run_lift(const std::string& orig_path, const std::string& dir, const std::string& sol_path,
             const std::string& out_path) {
  Instance oi = read_instance_file(orig_path);
  require_plain_unit(oi, "lift");
  auto t0 = std::chrono::steady_clock::now();
  Reduced r = compress(oi.graph);

  Instance ci = read_instance_file(dir + "/compressed.ds");
  VertexSet cw = ci.exempt ? *ci.exempt : VertexSet(ci.graph.n());
  std::vector<std::pair<int, int>> have = ci.graph.edges(), want = r.inst.g.edges();
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  if (ci.graph.n() != r.inst.g.n() || have != want || cw != r.inst.w ||
      ci.orig_ids != r.to_original)
    throw InputError(dir + "/compressed.ds does not match the compression of " + orig_path);

  VertexSet sol = read_solution_file(sol_path, r.inst.g.n());
  if (!is_dominating(r.inst.g, sol, VertexSet::full(r.inst.g.n()) - r.inst.w))
    throw ValidationError("solution does not dominate the compressed instance");
  VertexSet lifted = lift_solution({oi.graph, VertexSet(oi.graph.n())}, r, sol);

  SolveReport rep;
  rep.wall_ms = elapsed_ms(t0);
  rep.algorithm = "lift";
  rep.parameters["delta"] = r.delta;
  rep.parameters["forced"] = static_cast<long long>(r.solution.count());
  rep.parameters["reduced_size"] = static_cast<long long>(sol.count());
  rep.solution = one_based(lifted);
  rep.weight = static_cast<Weight>(lifted.count());
  rep.dominating = is_dominating(oi.graph, lifted, VertexSet::full(oi.graph.n()));
  rep.oracle_status = "off";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << 's';
    for (int v : rep.solution) f << ' ' << v;
    f << '\n';
  }
  emit(report_to_json(rep), "");
  return 0;
}

int run_decompose(const std::string& path, int d, const std::string& out_path) {
  Instance inst = read_instance_file(path);
  RawDecomposition raw = decompose_bounded_raw(inst.graph, d);
  std::vector<ValidationIssue> issues = verify_decomposition(raw, inst.graph);
  if (!issues.empty())
    throw ValidationError("decomposition failed verification: " + issues[0].axiom + ": " +
                          issues[0].detail);
  if (out_path.empty()) {
    write_td(std::cout, raw);
    return 0;
  }
  write_td_file(out_path, raw);
  nlohmann::json summary;
  summary["width"] = raw.width();
  summary["bags"] = raw.bags.size();
  summary["out"] = out_path;
  std::cout << summary.dump() << '\n';
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& sol_path,
               const std::string& td_path) {
  Instance inst = read_instance_file(graph_path);
  if (!td_path.empty()) {
    RawDecomposition raw = read_td_file(td_path);
    std::vector<ValidationIssue> issues = verify_decomposition(raw, inst.graph);
    nlohmann::json j;
    j["valid"] = issues.empty();
    j["width"] = raw.width();
    j["issues"] = nlohmann::json::array();
    for (const ValidationIssue& issue : issues)
      j["issues"].push_back(issue.axiom + ": " + issue.detail);
    std::cout << j.dump() << '\n';
    return issues.empty() ? 0 : 3;
  }
  if (sol_path.empty()) throw InputError("verify needs a solution file or --td");
  VertexSet sol = read_solution_file(sol_path, inst.graph.n());
  VertexSet targets = VertexSet::full(inst.graph.n());
  if (inst.exempt) targets -= *inst.exempt;
  bool ok = is_dominating(inst.graph, sol, targets);
  nlohmann::json j;
  j["dominating"] = ok;
  j["size"] = sol.count();
  j["weight"] = inst.weights.total(sol);
  std::cout << j.dump() << '\n';
  return ok ? 0 : 3;
}

std::vector<std::vector<int>> parse_family(const std::string& text) {
  std::vector<std::vector<int>> family;
  std::stringstream outer(text);
  std::string part;
  while (std::getline(outer, part, ';')) {
    std::vector<int> set;
    std::stringstream innr(part);
    std::string tok;
    while (std::getline(innr, tok, ',')) {
      try {
        set.push_back(std::stoi(tok) - 1);
      } catch (const std::exception&) {
        throw InputError("family sets must hold 1-based integers");
      }
    }
    family.push_back(std::move(set));
  }
  return family;
}

int run_gen(const std::string& type, int n, double p, uint64_t seed, int universe,
            const std::string& family_str, const std::string& weights_str,
            const std::string& out_path) {
  Instance inst;
  if (type == "random") {
    inst.graph = gen_random(n, p, seed);
  } else if (type == "cactus") {
    inst.graph = gen_cactus(n, seed);
  } else if (type == "hitting-set" || type == "set-cover") {
    std::vector<std::vector<int>> family = parse_family(family_str);
    inst.graph = type == "hitting-set" ? gen_from_hitting_set(universe, family)
                                       : gen_from_set_cover(universe, family);
  } else {
    throw InputError("unknown generator type " + type);
  }
  if (!weights_str.empty()) {
    size_t pos = weights_str.find(':');
    if (pos == std::string::npos) throw InputError("weights must be given as lo:hi");
    Weight lo = 0, hi = 0;
    try {
      lo = std::stoll(weights_str.substr(0, pos));
      hi = std::stoll(weights_str.substr(pos + 1));
    } catch (const std::exception&) {
      throw InputError("weights must be given as lo:hi");
    }
    inst.weights = gen_weights(inst.graph.n(), lo, hi, seed + 1);
  }
  if (out_path.empty()) {
    write_instance(std::cout, inst);
  } else {
    write_instance_file(out_path, inst);
  }
  return 0;
}

int worker_count(size_t jobs) {
  int t = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DOMSETKIT_THREADS")) {
    try {
      t = std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("DOMSETKIT_THREADS must be an integer");
    }
  }
  t = std::max(1, t);
  return static_cast<int>(std::min<size_t>(t, jobs));
}

int run_bench(const std::vector<std::string>& files, const std::string& algos_csv, int d,
              const std::string& csv_out) {
  std::vector<std::string> algos;
  std::stringstream ss(algos_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) algos.push_back(tok);
  if (algos.empty()) throw InputError("bench needs at least one algorithm");

  struct Job {
    std::string file, algo;
  };
  std::vector<Job> jobs;
  for (const std::string& f : files)
    for (const std::string& a : algos) jobs.push_back({f, a});

  auto bench_one = [&](const Job& job) {
    Instance inst = read_instance_file(job.file);
    AlgoOptions opt;
    opt.algo = job.algo;
    opt.d = d;
    opt.k = inst.graph.n();
    auto t0 = std::chrono::steady_clock::now();
    AlgoOutcome oc = dispatch_algo(inst, opt);
    double ms = elapsed_ms(t0);
    long long parameter = 0;
    for (const char* key : {"width", "vc", "fes", "modulator_size", "subset_bound"}) {
      auto it = oc.parameters.find(key);
      if (it != oc.parameters.end()) {
        parameter = it->second;
        break;
      }
    }
    std::ostringstream row;
    row << job.file << ',' << job.algo << ',' << inst.graph.n() << ',' << inst.graph.m() << ','
        << parameter << ',' << oc.res.weight << ',' << ms;
    return row.str();
  };

  std::vector<std::string> rows(jobs.size());
  const int pool = worker_count(jobs.size());
  for (size_t base = 0; base < jobs.size(); base += pool) {
    size_t stop = std::min(jobs.size(), base + pool);
    std::vector<std::future<std::string>> batch;
    for (size_t i = base; i < stop; ++i)
      batch.push_back(std::async(std::launch::async, bench_one, jobs[i]));
    for (size_t i = base; i < stop; ++i) rows[i] = batch[i - base].get();
  }

  std::ostringstream csv;
  csv << "instance,algo,n,m,parameter,weight,time_ms\n";
  for (const std::string& row : rows) csv << row << '\n';
  if (csv_out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(csv_out);
    if (!f) throw InputError("cannot write " + csv_out);
    f << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating set solver suite"};
  app.require_subcommand(1);

  const std::vector<std::string> algo_ids{"tw-exact",  "tw-approx2", "twd-approx2", "vc-exact",
                                          "fes-exact", "greedy",     "tradeoff"};

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("graph", solve_args.path, "instance file")->required();
  solve->add_option("--algo", solve_args.opt.algo, "algorithm")
      ->check(CLI::IsMember(algo_ids))
      ->required();
  solve->add_option("--d", solve_args.opt.d, "width bound for decompositions");
  solve->add_option("--td", solve_args.opt.td_path, "tree decomposition file");
  solve->add_option("--alpha", solve_args.opt.alpha, "tradeoff alpha as p/q");
  solve->add_option("--k", solve_args.opt.k, "tradeoff budget");
  solve->add_option("--max-subset", solve_args.opt.max_subset, "tradeoff enumeration cap");
  solve->add_flag("--check-oracle", solve_args.check_oracle, "cross-check against brute force");
  solve->add_flag("--emit-modulator", solve_args.emit_modulator, "include the modulator used");
  solve->add_option("--out", solve_args.out, "write the report here instead of stdout");

  std::string compress_path, compress_out;
  CLI::App* compress_cmd = app.add_subcommand("compress", "reduce an instance");
  compress_cmd->add_option("graph", compress_path, "instance file")->required();
  compress_cmd->add_option("--out", compress_out, "output directory")->required();

  std::string lift_orig, lift_dir, lift_sol, lift_out;
  CLI::App* lift_cmd = app.add_subcommand("lift", "lift a compressed solution");
  lift_cmd->add_option("graph", lift_orig, "original instance file")->required();
  lift_cmd->add_option("dir", lift_dir, "compress output directory")->required();
  lift_cmd->add_option("solution", lift_sol, "solution of the compressed instance")->required();
  lift_cmd->add_option("--out", lift_out, "also write the lifted solution file here");

  std::string dec_path, dec_out;
  int dec_d = 3;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "build a tree decomposition");
  dec_cmd->add_option("graph", dec_path, "instance file")->required();
  dec_cmd->add_option("--d", dec_d, "width bound");
  dec_cmd->add_option("--out", dec_out, "decomposition file (stdout when absent)");

  std::string ver_path, ver_sol, ver_td;
  CLI::App* ver_cmd = app.add_subcommand("verify", "verify a solution or decomposition");
  ver_cmd->add_option("graph", ver_path, "instance file")->required();
  ver_cmd->add_option("solution", ver_sol, "solution file");
  ver_cmd->add_option("--td", ver_td, "tree decomposition file to verify instead");

  std::string gen_type{"random"}, gen_family, gen_weights_str, gen_out;
  int gen_n = 10, gen_universe = 0;
  double gen_p = 0.3;
  uint64_t gen_seed = 1;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--type", gen_type, "random, cactus, hitting-set or set-cover")
      ->check(CLI::IsMember({"random", "cactus", "hitting-set", "set-cover"}));
  gen_cmd->add_option("--n", gen_n, "vertex count");
  gen_cmd->add_option("--p", gen_p, "edge probability");
  gen_cmd->add_option("--seed", gen_seed, "random seed");
  gen_cmd->add_option("--universe", gen_universe, "gadget universe size");
  gen_cmd->add_option("--family", gen_family, "gadget family, e.g. 1,2;2,3");
  gen_cmd->add_option("--weights", gen_weights_str, "vertex weight range lo:hi");
  gen_cmd->add_option("--out", gen_out, "instance file (stdout when absent)");

  std::vector<std::string> bench_files;
  std::string bench_algos, bench_csv;
  int bench_d = 3;
  CLI::App* bench_cmd = app.add_subcommand("bench", "time algorithms over instances");
  bench_cmd->add_option("graphs", bench_files, "instance files")->required();
  bench_cmd->add_option("--algo", bench_algos, "comma-separated algorithms")->required();
  bench_cmd->add_option("--d", bench_d, "width bound for decompositions");
  bench_cmd->add_option("--csv", bench_csv, "CSV file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (compress_cmd->parsed()) return run_compress(compress_path, compress_out);
    if (lift_cmd->parsed()) return run_lift(lift_orig, lift_dir, lift_sol, lift_out);
    if (dec_cmd->parsed()) return run_decompose(dec_path, dec_d, dec_out);
    if (ver_cmd->parsed()) return run_verify(ver_path, ver_sol, ver_td);
    if (gen_cmd->parsed())
      return run_gen(gen_type, gen_n, gen_p, gen_seed, gen_universe, gen_family,
                     gen_weights_str, gen_out);
    if (bench_cmd->parsed()) return run_bench(bench_files, bench_algos, bench_d, bench_csv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
