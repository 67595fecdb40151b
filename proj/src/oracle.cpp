#include "mbranch/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "mbranch/augment.hpp"
#include "mbranch/dsu.hpp"

namespace mbranch {

namespace {

bool valid_ids(const Digraph& g, std::span<const ArcId> arcs) {
  std::vector<ArcId> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return sorted.empty() || (sorted.front() >= 0 && sorted.back() < g.num_arcs());
}

bool acyclic(const Digraph& g, std::span<const ArcId> arcs) {
  RankDsu forest(g.num_nodes());
  for (ArcId a : arcs) {
    if (!forest.unite(g.arc(a).tail, g.arc(a).head)) return false;
  }
  return true;
}

// In-degree at most one and distinct head colors: independence in the arc matroid.
bool arc_independent(const Instance& inst, std::span<const ArcId> arcs) {
  std::vector<NodeId> heads;
  std::vector<ColorId> colors;
  for (ArcId a : arcs) {
    heads.push_back(inst.graph.arc(a).head);
    colors.push_back(inst.coloring.color_of(heads.back()));
  }
  std::sort(heads.begin(), heads.end());
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(heads.begin(), heads.end()) == heads.end() &&
         std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

std::string arc_label(const Digraph& g, ArcId a) {
  std::ostringstream os;
  os << "arc " << a + 1 << " (" << g.arc(a).tail + 1 << "->" << g.arc(a).head + 1 << ")";
  return os.str();
}

}  // namespace

bool is_branching(const Digraph& g, std::span<const ArcId> arcs) {
  if (!valid_ids(g, arcs)) return false;
  std::vector<std::uint8_t> entered(static_cast<std::size_t>(g.num_nodes()), 0);
  for (ArcId a : arcs) {
    auto& e = entered[static_cast<std::size_t>(g.arc(a).head)];
    if (e) return false;
    e = 1;
  }
  return acyclic(g, arcs);
}

bool is_matroid_branching(const Instance& inst, std::span<const ArcId> arcs) {
  return is_branching(inst.graph, arcs) && arc_independent(inst, arcs);
}

OptimumResult enumerate_optimum(const Instance& inst) {
  const Digraph& g = inst.graph;
  const std::int32_t m = g.num_arcs();
  if (m > kMaxEnumerateArcs) {
    throw std::length_error("enumeration limited to " + std::to_string(kMaxEnumerateArcs) + " arcs");
  }
  const auto n = static_cast<std::size_t>(g.num_nodes());
  const auto k = static_cast<std::size_t>(inst.coloring.num_colors());
  std::vector<std::uint8_t> node_used(n);
  std::vector<std::uint8_t> color_used(k);
  std::vector<ArcId> chosen;

  OptimumResult best;
  bool have_best = false;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    chosen.clear();
    std::fill(node_used.begin(), node_used.end(), 0);
    std::fill(color_used.begin(), color_used.end(), 0);
    bool ok = true;
    Weight weight = 0;
    for (ArcId a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1U)) continue;
      const NodeId h = g.arc(a).head;
      auto& nu = node_used[static_cast<std::size_t>(h)];
      auto& cu = color_used[static_cast<std::size_t>(inst.coloring.color_of(h))];
      if (nu || cu) ok = false;
      nu = cu = 1;
      weight += g.arc(a).weight;
      chosen.push_back(a);
    }
    if (!ok || !acyclic(g, chosen)) continue;
    const auto card = static_cast<std::int64_t>(chosen.size());
    if (!have_best || card > best.cardinality ||
        (card == best.cardinality && (weight < best.weight || (weight == best.weight && chosen < best.witness)))) {
      best.cardinality = card;
      best.weight = weight;
      best.witness = chosen;
      have_best = true;
    }
  }
  return best;
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed(); });
}

std::string AuditReport::render() const {
  std::ostringstream os;
  for (const AuditCheck& c : checks) {
    os << "audit " << c.name << (c.passed() ? " pass" : " FAIL") << '\n';
    for (const std::string& v : c.violations) os << "  " << v << '\n';
  }
  os << "audit verdict " << (passed() ? "pass" : "FAIL") << '\n';
  return os.str();
}

AuditReport audit_certificate(const Instance& original, std::span<const ArcId> augmented_branching,
                              const DualCertificate& cert) {
  const AugmentedInstance aug = augment_with_root(original);
  const Instance& ai = aug.instance;
  const Digraph& g = ai.graph;
  const auto n = static_cast<std::size_t>(g.num_nodes());
  if (cert.num_colors != ai.coloring.num_colors()) throw std::invalid_argument("certificate color count mismatch");
  if (cert.node_set.size() != n) throw std::invalid_argument("certificate node count mismatch");
  if (cert.aux_weight != aug.aux_weight) throw std::invalid_argument("certificate auxiliary weight mismatch");
  const auto num_sets = static_cast<std::int32_t>(cert.set_parent.size());
  for (std::int32_t s : cert.node_set) {
    if (s < kNone || s >= num_sets) throw std::invalid_argument("certificate references an unknown set");
  }
  for (std::int32_t i = 0; i < num_sets; ++i) {
    const std::int32_t p = cert.set_parent[static_cast<std::size_t>(i)];
    if (p != kNone && (p <= i || p >= num_sets)) throw std::invalid_argument("certificate set forest is malformed");
  }
  const std::vector<Weight> pi = cert.pi();
  const std::vector<Weight> xi = cert.xi();

  // Depth and ξ summed from each set to the top of its chain; parents have larger ids.
  const auto ns = static_cast<std::size_t>(num_sets);
  std::vector<std::int32_t> depth(ns, 0);
  std::vector<Weight> xi_up(ns, 0);
  for (std::size_t i = ns; i-- > 0;) {
    const std::int32_t p = cert.set_parent[i];
    depth[i] = p == kNone ? 0 : depth[static_cast<std::size_t>(p)] + 1;
    xi_up[i] = xi[i] + (p == kNone ? 0 : xi_up[static_cast<std::size_t>(p)]);
  }
  auto common_set = [&](NodeId u, NodeId v) {
    std::int32_t a = cert.node_set[static_cast<std::size_t>(u)];
    std::int32_t b = cert.node_set[static_cast<std::size_t>(v)];
    while (a != b && a != kNone && b != kNone) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      a = cert.set_parent[static_cast<std::size_t>(a)];
    }
    return a == b ? a : kNone;
  };
  auto reduced = [&](ArcId a) {
    const Arc& arc = g.arc(a);
    const std::int32_t s = common_set(arc.tail, arc.head);
    return arc.weight - pi[static_cast<std::size_t>(ai.coloring.color_of(arc.head))] +
           (s == kNone ? 0 : xi_up[static_cast<std::size_t>(s)]);
  };

  AuditReport report;
  AuditCheck primal{"primal", {}};
  if (!is_matroid_branching(ai, augmented_branching)) primal.violations.push_back("not a matroid branching");

  AuditCheck sign{"xi-sign", {}};
  for (std::size_t i = 0; i < ns; ++i) {
    if (xi[i] < 0) sign.violations.push_back("set " + std::to_string(i + 1) + " has potential " + std::to_string(xi[i]));
  }

  AuditCheck feasible{"dual-feasible", {}};
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const Weight r = reduced(a);
    if (r < 0) feasible.violations.push_back(arc_label(g, a) + " has reduced weight " + std::to_string(r));
  }

  AuditCheck cs1{"cs1", {}};
  AuditCheck cs2{"cs2", {}};
  AuditCheck rows{"equality-rows", {}};
  if (primal.passed()) {
    std::vector<std::int64_t> inside(ns, 0);
    std::vector<std::int64_t> size(ns, 0);
    std::vector<std::int64_t> entered(static_cast<std::size_t>(cert.num_colors), 0);
    for (ArcId a : augmented_branching) {
      const Weight r = reduced(a);
      if (r != 0) cs1.violations.push_back(arc_label(g, a) + " has reduced weight " + std::to_string(r));
      const std::int32_t s = common_set(g.arc(a).tail, g.arc(a).head);
      if (s != kNone) ++inside[static_cast<std::size_t>(s)];
      ++entered[static_cast<std::size_t>(ai.coloring.color_of(g.arc(a).head))];
    }
    for (std::int32_t s : cert.node_set) {
      if (s != kNone) ++size[static_cast<std::size_t>(s)];
    }
    for (std::size_t i = 0; i < ns; ++i) {
      const std::int32_t p = cert.set_parent[i];
      if (p == kNone) continue;
      inside[static_cast<std::size_t>(p)] += inside[i];
      size[static_cast<std::size_t>(p)] += size[i];
    }
    for (std::size_t i = 0; i < ns; ++i) {
      if (xi[i] > 0 && inside[i] != size[i] - 1) {
        cs2.violations.push_back("set " + std::to_string(i + 1) + " holds " + std::to_string(inside[i]) +
                                 " branching arcs, expected " + std::to_string(size[i] - 1));
      }
    }
    std::vector<std::uint8_t> has_inbound(entered.size(), 0);
    for (const Arc& arc : g.arcs()) has_inbound[static_cast<std::size_t>(ai.coloring.color_of(arc.head))] = 1;
    for (std::size_t c = 0; c < entered.size(); ++c) {
      if (has_inbound[c] && entered[c] != 1) {
        rows.violations.push_back("color " + std::to_string(c + 1) + " entered " + std::to_string(entered[c]) +
                                  " times");
      }
    }
  } else {
    const std::string skipped = "skipped: branching is invalid";
    cs1.violations.push_back(skipped);
    cs2.violations.push_back(skipped);
    rows.violations.push_back(skipped);
  }
  report.checks = {primal, sign, feasible, cs1, cs2, rows};
  return report;
}

bool is_maximum_by_exchange(const Instance& inst, std::span<const ArcId> branching) {
  const Digraph& g = inst.graph;
  if (g.num_arcs() > kMaxExchangeArcs) {
    throw std::length_error("exchange check limited to " + std::to_string(kMaxExchangeArcs) + " arcs");
  }
  if (!is_matroid_branching(inst, branching)) throw std::invalid_argument("not a matroid branching");

  const std::vector<ArcId> in_b(branching.begin(), branching.end());
  std::vector<ArcId> out_b;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (std::find(in_b.begin(), in_b.end(), a) == in_b.end()) out_b.push_back(a);
  }
  // Exchange digraph nodes: [0, |B|) are branching arcs, then the others.
  const std::size_t nb = in_b.size();
  const std::size_t total = nb + out_b.size();
  std::vector<std::vector<std::size_t>> next(total);
  std::vector<std::uint8_t> initial(total, 0);
  std::vector<std::uint8_t> final_(total, 0);
  std::vector<ArcId> trial;
  for (std::size_t j = 0; j < out_b.size(); ++j) {
    const std::size_t y = nb + j;
    trial = in_b;
    trial.push_back(out_b[j]);
    initial[y] = arc_independent(inst, trial) ? 1 : 0;
    final_[y] = acyclic(g, trial) ? 1 : 0;
    for (std::size_t x = 0; x < nb; ++x) {
      trial = in_b;
      trial[x] = out_b[j];
      if (acyclic(g, trial)) next[y].push_back(x);
      if (arc_independent(inst, trial)) next[x].push_back(y);
    }
  }

  std::vector<std::uint8_t> seen(total, 0);
  std::deque<std::size_t> queue;
  for (std::size_t y = nb; y < total; ++y) {
    if (initial[y]) {
      seen[y] = 1;
      queue.push_back(y);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (final_[u]) return false;
    for (std::size_t v : next[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return true;
}

}  // namespace mbranch
