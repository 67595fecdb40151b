#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "mbranch/cmb_solver.hpp"
#include "mbranch/generator.hpp"
#include "mbranch/io.hpp"
#include "mbranch/oracle.hpp"
#include "mbranch/reductions.hpp"
#include "mbranch/wmb_dense.hpp"
#include "mbranch/wmb_sparse.hpp"

namespace mbranch::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

template <class Parse>
auto read_file(const std::string& path, Parse&& parse) {
  std::ifstream in(path);
  if (!in) throw Failure{kParseError, "cannot open " + path};
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw Failure{kParseError, path + ": " + e.what()};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kInfeasible, "cannot write " + path};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct EngineRun {
  std::string engine;
  std::vector<ArcId> branching;
  std::optional<WmbResult> weighted;
  SolveCounters counters;
  double wall_ms = 0;
};

std::string pick_engine(const std::string& engine, const Instance& inst) {
  if (engine != "auto") return engine;
  const auto n = static_cast<std::int64_t>(inst.graph.num_nodes());
  const auto m = static_cast<std::int64_t>(inst.graph.num_arcs());
  return n <= 4096 && 8 * m >= n * n ? "dense" : "sparse";
}

EngineRun run_engine(const std::string& engine, const Instance& inst, const SolveOptions& options,
                     std::uint64_t seed) {
  EngineRun run;
  run.engine = pick_engine(engine, inst);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (run.engine == "sparse" || run.engine == "dense") {
      WmbResult r = run.engine == "sparse" ? solve_wmb_sparse(inst, options) : solve_wmb_dense(inst, options);
      run.branching = r.branching;
      run.counters = r.counters;
      run.weighted = std::move(r);
    } else if (run.engine == "cmb") {
      CmbOptions o;
      o.trace = options.trace;
      o.self_check = options.self_check;
      o.seed = seed;
      CmbResult r = solve_cmb(inst, o);
      run.branching = r.branching;
      run.counters = r.counters;
    } else {
      run.branching = enumerate_optimum(inst).witness;
    }
  } catch (const std::length_error& e) {
    throw Failure{kInfeasible, e.what()};
  } catch (const std::overflow_error& e) {
    throw Failure{kInfeasible, e.what()};
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

void write_counters(std::ostream& os, const SolveCounters& c) {
  os << "c counters insertions " << c.heap_insertions << " extractions " << c.heap_extractions << " melds "
     << c.heap_melds << " unions " << c.dsu_unions << " contractions " << c.contractions << " dual_steps "
     << c.dual_steps << " touch " << c.touch_work << '\n';
}

// Appends the check report as comment lines; returns false on any violation.
bool run_checks(std::ostream& os, const Instance& inst, const EngineRun& run) {
  bool ok = true;
  const bool valid = is_matroid_branching(inst, run.branching);
  os << "c check branching " << (valid ? "pass" : "FAIL") << '\n';
  ok = ok && valid;
  if (run.weighted) {
    const AuditReport report = audit_certificate(inst, run.weighted->augmented_branching, run.weighted->certificate);
    std::istringstream lines(report.render());
    for (std::string line; std::getline(lines, line);) os << "c " << line << '\n';
    ok = ok && report.passed();
  }
  if (!valid) {
    os << "c check exchange skipped\n";
  } else if (inst.graph.num_arcs() > kMaxExchangeArcs) {
    os << "c check exchange skipped (more than " << kMaxExchangeArcs << " arcs)\n";
  } else {
    const bool maximum = is_maximum_by_exchange(inst, run.branching);
    os << "c check exchange " << (maximum ? "pass" : "FAIL") << '\n';
    ok = ok && maximum;
  }
  return ok;
}

struct SolveArgs {
  std::string input;
  std::string engine = "auto";
  std::string output;
  std::string trace;
  std::uint64_t seed = 0;
  bool check = false;
  bool self_check = false;
  bool time = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = read_file(a.input, [](std::istream& in) { return parse_instance(in); });
  std::ofstream trace_file;
  SolveOptions options;
  options.self_check = a.self_check;
  if (!a.trace.empty()) {
    trace_file.open(a.trace, std::ios::binary);
    if (!trace_file) throw Failure{kInfeasible, "cannot write " + a.trace};
    options.trace = &trace_file;
  }
  const EngineRun run = run_engine(a.engine, inst, options, a.seed);

  std::ostringstream os;
  os << "c engine " << run.engine << '\n';
  write_solution(os, inst.graph, run.branching);
  if (run.engine != "brute") write_counters(os, run.counters);
  const bool ok = !a.check || run_checks(os, inst, run);
  if (a.time) os << "c time_ms " << std::fixed << std::setprecision(3) << run.wall_ms << '\n';
  emit(a.output, os.str(), out);
  return ok ? kOk : kAuditFailure;
}

int cmd_gen(const GenParams& p, const std::string& output, std::ostream& out) {
  Instance inst;
  try {
    inst = generate_instance(p);
  } catch (const std::invalid_argument& e) {
    throw Failure{kInfeasible, e.what()};
  }
  std::ostringstream os;
  write_instance(os, inst);
  emit(output, os.str(), out);
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> engines{"sparse", "dense"};
  std::vector<std::string> families{"random"};
  std::vector<std::int32_t> sizes{1000};
  std::int32_t density = 8;
  std::int32_t reps = 1;
  std::uint64_t seed = 1;
};

GenParams bench_params(const std::string& family, std::int32_t n, std::int32_t density, std::uint64_t seed) {
  GenParams p;
  p.nodes = n;
  p.seed = seed;
  p.wmin = 0;
  p.wmax = 1000;
  p.colors = std::max(1, n / 3);
  const auto sparse_m = static_cast<std::int64_t>(n) * density;
  const auto dense_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  p.arcs = static_cast<std::int32_t>(std::min<std::int64_t>(family == "dense" ? dense_m : sparse_m, 1 << 30));
  if (family == "classic") p.colors = n;
  if (n < 2) p.arcs = 0;
  return p;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  out << "engine,family,n,m,k,rep,cardinality,weight,insertions,extractions,melds,unions,contractions,"
         "dual_steps,touch_work,wall_ms\n";
  std::uint64_t family_index = 0;
  for (const std::string& family : a.families) {
    ++family_index;
    for (std::int32_t n : a.sizes) {
      for (std::int32_t rep = 0; rep < a.reps; ++rep) {
        const std::uint64_t seed = a.seed * 1000003ULL + family_index * 7919ULL +
                                   static_cast<std::uint64_t>(n) * 31ULL + static_cast<std::uint64_t>(rep);
        Instance inst;
        try {
          inst = generate_instance(bench_params(family, n, a.density, seed));
        } catch (const std::invalid_argument& e) {
          throw Failure{kInfeasible, e.what()};
        }
        for (const std::string& engine : a.engines) {
          EngineRun run;
          try {
            run = run_engine(engine, inst, SolveOptions{}, seed);
          } catch (const Failure& f) {
            err << "skipping " << engine << " at n=" << n << ": " << f.message << '\n';
            continue;
          }
          const SolveCounters& c = run.counters;
          out << run.engine << ',' << family << ',' << inst.graph.num_nodes() << ',' << inst.graph.num_arcs() << ','
              << inst.coloring.num_colors() << ',' << rep << ',' << run.branching.size() << ','
              << total_weight(inst.graph, run.branching) << ',' << c.heap_insertions << ',' << c.heap_extractions
              << ',' << c.heap_melds << ',' << c.dsu_unions << ',' << c.contractions << ',' << c.dual_steps << ','
              << c.touch_work << ',' << std::fixed << std::setprecision(3) << run.wall_ms << '\n';
        }
      }
    }
  }
  return kOk;
}

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string instance_out;
  std::string map_out;
  std::string solution;
  std::string map;
  std::string output;
};

Reduction reduce_input(const ReduceArgs& a, BipartiteInstance* bip, OrientationInstance* ori) {
  try {
    if (a.kind == "matching") {
      *bip = read_file(a.input, [](std::istream& in) { return parse_bipartite(in); });
      return reduce_matching(*bip);
    }
    *ori = read_file(a.input, [](std::istream& in) { return parse_orientation(in); });
    return reduce_orientation(*ori);
  } catch (const std::invalid_argument& e) {
    throw Failure{kParseError, a.input + ": " + e.what()};
  }
}

int cmd_reduce(const ReduceArgs& a) {
  BipartiteInstance bip;
  OrientationInstance ori;
  const Reduction r = reduce_input(a, &bip, &ori);
  std::ostringstream inst_text;
  std::ostringstream map_text;
  write_instance(inst_text, r.instance);
  write_backmap(map_text, r.back);
  write_file(a.instance_out, inst_text.str());
  write_file(a.map_out, map_text.str());
  return kOk;
}

int cmd_extract(const ReduceArgs& a, std::ostream& out) {
  BipartiteInstance bip;
  OrientationInstance ori;
  const Reduction r = reduce_input(a, &bip, &ori);
  const SolutionFile sol = read_file(a.solution, [](std::istream& in) { return parse_solution(in); });
  const BackMap back = read_file(a.map, [](std::istream& in) { return parse_backmap(in); });
  std::vector<ArcId> arcs;
  try {
    arcs = resolve_solution(r.instance.graph, sol);
  } catch (const std::invalid_argument& e) {
    throw Failure{kParseError, a.solution + ": " + e.what()};
  }
  std::ostringstream os;
  try {
    if (a.kind == "matching") {
      const std::vector<std::int32_t> edges = extract_matching(arcs, back);
      for (std::int32_t e : edges) {
        if (static_cast<std::size_t>(e) >= bip.edges.size()) throw std::out_of_range("back-map edge out of range");
      }
      write_matching(os, bip, edges);
    } else {
      write_oriented(os, extract_orientation(arcs, back, ori));
    }
  } catch (const std::out_of_range& e) {
    throw Failure{kParseError, a.map + ": " + e.what()};
  }
  emit(a.output, os.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-weight maximum-cardinality rainbow matroid branchings", "mbranch"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", solve_args.input, "Instance file")->required();
  solve->add_option("--engine", solve_args.engine, "auto, sparse, dense, cmb or brute")
      ->check(CLI::IsMember({"auto", "sparse", "dense", "cmb", "brute"}));
  solve->add_option("-o,--output", solve_args.output, "Write the solution here instead of stdout");
  solve->add_option("--trace", solve_args.trace, "Write the event trace to this file");
  solve->add_option("--seed", solve_args.seed, "Arc order seed for the cmb engine (0 = by id)");
  solve->add_flag("--check", solve_args.check, "Audit the result, exit 3 on a violation");
  solve->add_flag("--self-check", solve_args.self_check, "Verify solver invariants after every step");
  solve->add_flag("--time", solve_args.time, "Report wall time");

  GenParams gen_params;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--nodes", gen_params.nodes)->required();
  gen->add_option("--arcs", gen_params.arcs)->required();
  gen->add_option("--colors", gen_params.colors)->required();
  gen->add_option("--seed", gen_params.seed);
  gen->add_option("--wmin", gen_params.wmin);
  gen->add_option("--wmax", gen_params.wmax);
  gen->add_option("-o,--output", gen_output);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time engines on generated instances, CSV to stdout");
  bench->add_option("--engines", bench_args.engines)
      ->delimiter(',')
      ->check(CLI::IsMember({"auto", "sparse", "dense", "cmb", "brute"}));
  bench->add_option("--families", bench_args.families, "random, classic (one color per node) or dense")
      ->delimiter(',')
      ->check(CLI::IsMember({"random", "classic", "dense"}));
  bench->add_option("--sizes", bench_args.sizes, "Node counts")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--density", bench_args.density, "Arcs per node for sparse families")->check(CLI::NonNegativeNumber);
  bench->add_option("--reps", bench_args.reps)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed);

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Reduce matching or orientation to a branching instance");
  reduce->add_option("kind", reduce_args.kind)->required()->check(CLI::IsMember({"matching", "orientation"}));
  reduce->add_option("--input", reduce_args.input)->required();
  reduce->add_option("--instance-out", reduce_args.instance_out)->required();
  reduce->add_option("--map-out", reduce_args.map_out)->required();

  ReduceArgs extract_args;
  auto* extract = app.add_subcommand("extract", "Map a branching of a reduced instance back");
  extract->add_option("kind", extract_args.kind)->required()->check(CLI::IsMember({"matching", "orientation"}));
  extract->add_option("--input", extract_args.input, "The file that was reduced")->required();
  extract->add_option("--solution", extract_args.solution)->required();
  extract->add_option("--map", extract_args.map)->required();
  extract->add_option("-o,--output", extract_args.output);

  std::vector<const char*> argv{"mbranch"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args, out);
    if (gen->parsed()) return cmd_gen(gen_params, gen_output, out);
    if (bench->parsed()) return cmd_bench(bench_args, out, err);
    if (reduce->parsed()) return cmd_reduce(reduce_args);
    return cmd_extract(extract_args, out);
  } catch (const Failure& f) {
    err << "mbranch: " << f.message << '\n';
    return f.code;
  }
}

}  // namespace mbranch::cli
