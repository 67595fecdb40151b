// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mbranch/cmb_solver.hpp"
#include "mbranch/generator.hpp"
#include "mbranch/oracle.hpp"
#include "mbranch/reductions.hpp"
#include "mbranch/wmb_dense.hpp"
#include "mbranch/wmb_sparse.hpp"
#include "support.hpp"

namespace {

using namespace mbranch;

constexpr int kSuiteSize = 1200;
constexpr int kNonOptimal = 500;
constexpr int kReductionCases = 400;

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;
};

void report(const Criterion& c) {
  std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ": " << c.detail << '\n';
}

bool counters_ok(const WmbResult& r, const Instance& inst, bool dense) {
  const auto n = static_cast<std::int64_t>(inst.graph.num_nodes());
  const auto m = static_cast<std::int64_t>(inst.graph.num_arcs());
  const SolveCounters& c = r.counters;
  if (dense) return c.touch_work <= 4 * n * n;
  return c.heap_extractions <= c.heap_insertions && c.heap_insertions <= m + n && c.heap_melds <= n &&
         c.dsu_unions <= 6 * n;
}

// A random matroid branching: arcs offered in random order, each kept with
// probability 1/2 when it keeps the set a matroid branching.
std::vector<ArcId> random_branching(const Instance& inst, std::mt19937_64& rng) {
  std::vector<ArcId> order(static_cast<std::size_t>(inst.graph.num_arcs()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<ArcId>(i);
  shuffle_in_place(order, rng);
  std::vector<ArcId> b;
  for (ArcId a : order) {
    if (uniform_below(rng, 2) == 0) continue;
    b.push_back(a);
    if (!is_matroid_branching(inst, b)) b.pop_back();
  }
  std::sort(b.begin(), b.end());
  return b;
}

std::string run_cli(const std::vector<std::string>& args, int* code) {
  std::ostringstream out;
  std::ostringstream err;
  *code = cli::run(args, out, err);
  return out.str();
}

std::string strip_last_column(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  for (std::string line; std::getline(in, line);) out << line.substr(0, line.rfind(',')) << '\n';
  return out.str();
}

}  // namespace

int main() {
  Criterion c1{1, "weighted oracle equivalence", true, ""};
  Criterion c2{2, "unweighted oracle equivalence", true, ""};
  Criterion c3{3, "certificate audit", true, ""};
  Criterion c4{4, "exchange digraph cross-check", true, ""};
  Criterion c5{5, "classic branching special case", true, ""};
  Criterion c6{6, "reduction round-trips", true, ""};
  Criterion c7{7, "complexity counters", true, ""};
  Criterion c8{8, "determinism", true, ""};
  Criterion c9{9, "scale smoke", true, ""};

  std::mt19937_64 rng(20240611);
  std::int64_t mismatch1 = 0, mismatch2 = 0, audit_fail = 0, exch_pairs = 0, exch_disagree = 0;
  std::int64_t classic_cases = 0, classic_mismatch = 0, counter_fail = 0;
  std::int64_t non_optimal = 0, contractions = 0, dual_steps = 0;
  std::vector<Instance> suite;
  std::vector<std::int64_t> suite_max;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < kSuiteSize; ++i) {
    const Instance inst = generate_instance(test::small_params(rng));
    const OptimumResult opt = enumerate_optimum(inst);
    const WmbResult sparse = solve_wmb_sparse(inst);
    const WmbResult dense = solve_wmb_dense(inst);
    CmbOptions cmb_options;
    cmb_options.seed = rng() | 1U;
    const CmbResult cmb = solve_cmb(inst, cmb_options);
    const CmbResult cmb_id = solve_cmb(inst);

    for (const WmbResult* r : {&sparse, &dense}) {
      if (r->cardinality != opt.cardinality || r->weight != opt.weight || !is_matroid_branching(inst, r->branching) ||
          total_weight(inst.graph, r->branching) != r->weight) {
        ++mismatch1;
      }
      if (!audit_certificate(inst, r->augmented_branching, r->certificate).passed()) ++audit_fail;
    }
    for (const CmbResult* r : {&cmb, &cmb_id}) {
      if (r->cardinality != opt.cardinality || !is_matroid_branching(inst, r->branching)) ++mismatch2;
    }
    contractions += sparse.counters.contractions;
    dual_steps += sparse.counters.dual_steps;
    if (!counters_ok(sparse, inst, false) || !counters_ok(dense, inst, true)) ++counter_fail;

    for (const std::vector<ArcId>* b : {&sparse.branching, &dense.branching, &cmb.branching, &opt.witness}) {
      ++exch_pairs;
      const bool maximal = static_cast<std::int64_t>(b->size()) == opt.cardinality;
      if (is_maximum_by_exchange(inst, *b) != maximal) ++exch_disagree;
    }

    // Classic case: same arcs, one color per node.
    std::vector<ColorId> own(static_cast<std::size_t>(inst.graph.num_nodes()));
    for (std::size_t v = 0; v < own.size(); ++v) own[v] = static_cast<ColorId>(v);
    const Instance classic = make_instance(inst.graph, Coloring(own, inst.graph.num_nodes()));
    const test::Best wb = test::brute_force_branching(classic.graph);
    ++classic_cases;
    for (const WmbResult& r : {solve_wmb_sparse(classic), solve_wmb_dense(classic)}) {
      if (r.cardinality != wb.cardinality || r.weight != wb.weight) ++classic_mismatch;
    }

    suite_max.push_back(opt.cardinality);
    suite.push_back(inst);
  }
  // Random non-maximum branchings drawn from the suite, round-robin.
  for (std::size_t i = 0; non_optimal < kNonOptimal && i < suite.size() * 50; ++i) {
    const Instance& inst = suite[i % suite.size()];
    const std::vector<ArcId> b = random_branching(inst, rng);
    if (static_cast<std::int64_t>(b.size()) == suite_max[i % suite.size()]) continue;
    ++non_optimal;
    ++exch_pairs;
    if (is_maximum_by_exchange(inst, b)) ++exch_disagree;
  }
  const double suite_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  c1.pass = mismatch1 == 0;
  c1.detail = std::to_string(kSuiteSize) + " instances x 2 engines, " + std::to_string(mismatch1) + " mismatches (" +
              std::to_string(contractions) + " contractions, " + std::to_string(dual_steps) + " dual steps, " +
              std::to_string(static_cast<int>(suite_s)) + " s)";
  c2.pass = mismatch2 == 0;
  c2.detail = std::to_string(kSuiteSize) + " instances x 2 arc orders, " + std::to_string(mismatch2) + " mismatches";
  c3.pass = audit_fail == 0;
  c3.detail = std::to_string(2 * kSuiteSize) + " audits, " + std::to_string(audit_fail) + " failures";
  c4.pass = exch_disagree == 0 && non_optimal == kNonOptimal;
  c4.detail = std::to_string(exch_pairs) + " pairs (" + std::to_string(non_optimal) + " non-maximum), " +
              std::to_string(exch_disagree) + " disagreements";
  c5.pass = classic_mismatch == 0;
  c5.detail = std::to_string(classic_cases) + " instances x 2 engines, " + std::to_string(classic_mismatch) +
              " mismatches";

  // Reductions.
  std::int64_t red_mismatch = 0;
  for (int i = 0; i < kReductionCases; ++i) {
    const BipartiteInstance b = test::random_bipartite(rng, 6);
    const test::Best want = test::brute_force_matching(b);
    const Reduction r = reduce_matching(b);
    for (const WmbResult& res : {solve_wmb_sparse(r.instance), solve_wmb_dense(r.instance)}) {
      const std::vector<std::int32_t> edges = extract_matching(res.branching, r.back);
      Weight w = 0;
      std::vector<int> used_x(static_cast<std::size_t>(b.num_x)), used_y(static_cast<std::size_t>(b.num_y));
      bool matching = true;
      for (std::int32_t e : edges) {
        const BipartiteEdge& edge = b.edges[static_cast<std::size_t>(e)];
        w += edge.weight;
        if (used_x[static_cast<std::size_t>(edge.x)]++ || used_y[static_cast<std::size_t>(edge.y)]++) matching = false;
      }
      if (!matching || static_cast<std::int64_t>(edges.size()) != want.cardinality || w != want.weight) ++red_mismatch;
    }
    const OrientationInstance o = test::random_orientation(rng, 6);
    const test::Best want_o = test::brute_force_orientation(o);
    const Reduction ro = reduce_orientation(o);
    for (const WmbResult& res : {solve_wmb_sparse(ro.instance), solve_wmb_dense(ro.instance)}) {
      const std::vector<OrientedEdge> oriented = extract_orientation(res.branching, ro.back, o);
      Weight w = 0;
      std::vector<int> indeg(static_cast<std::size_t>(o.num_nodes));
      bool valid = true;
      for (const OrientedEdge& e : oriented) {
        w += e.weight;
        if (indeg[static_cast<std::size_t>(e.head)]++) valid = false;
      }
      if (!valid || static_cast<std::int64_t>(oriented.size()) != want_o.cardinality || w != want_o.weight) {
        ++red_mismatch;
      }
    }
  }
  c6.pass = red_mismatch == 0;
  c6.detail = std::to_string(kReductionCases) + " matching + " + std::to_string(kReductionCases) +
              " orientation instances x 2 engines, " + std::to_string(red_mismatch) + " mismatches";

  // Determinism through the command line, in process.
  {
    bool same = true;
    int code = 0;
    const std::vector<std::string> gen{"gen", "--nodes", "40", "--arcs", "200", "--colors", "9",
                                       "--seed", "77", "--wmin", "-20", "--wmax", "20"};
    const std::string inst_a = run_cli(gen, &code);
    same = same && code == 0 && inst_a == run_cli(gen, &code);
    const std::string path = "acceptance_determinism.wmb";
    {
      std::ofstream f(path);
      f << inst_a;
    }
    for (const char* engine : {"sparse", "dense", "cmb", "auto"}) {
      const std::vector<std::string> solve{"solve", path, "--engine", engine, "--seed", "5"};
      const std::string s1 = run_cli(solve, &code);
      same = same && code == 0 && s1 == run_cli(solve, &code) && code == 0;
    }
    const std::vector<std::string> bench{"bench", "--engines", "sparse,dense,cmb", "--families",
                                         "random,classic,dense", "--sizes", "30,60", "--reps", "2", "--seed", "3"};
    const std::string b1 = run_cli(bench, &code);
    same = same && code == 0 && strip_last_column(b1) == strip_last_column(run_cli(bench, &code));
    std::remove(path.c_str());
    c8.pass = same;
    c8.detail = same ? "gen, solve (4 engines) and bench outputs byte-identical across runs" : "outputs differ";
  }

  // Scale.
  {
    GenParams p;
    p.nodes = 100000;
    p.arcs = 1000000;
    p.colors = p.nodes;
    p.seed = 9;
    p.wmin = -1000;
    p.wmax = 1000;
    const Instance big = generate_instance(p);
    const auto start = std::chrono::steady_clock::now();
    const WmbResult r = solve_wmb_sparse(big);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool counters = counters_ok(r, big, false);
    if (!counters) ++counter_fail;
    const bool valid = is_matroid_branching(big, r.branching);
    c9.pass = secs < 60.0 && counters && valid;
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << "n=100000 m=1000000 solved in " << secs << " s, cardinality " << r.cardinality
      << ", contractions " << r.counters.contractions
      << ", dual steps " << r.counters.dual_steps << ", extractions " << r.counters.heap_extractions << ", melds " << r.counters.heap_melds << ", unions "
      << r.counters.dsu_unions;
    c9.detail = d.str();
  }

  c7.pass = counter_fail == 0;
  c7.detail = std::to_string(kSuiteSize) + " suite instances on both engines plus the scale run, " +
              std::to_string(counter_fail) + " violations";

  bool all = true;
  for (const Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c9}) {
    report(*c);
    all = all && c->pass;
  }
  return all ? 0 : 1;
}
