#include "mbranch/wmb_dense.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbranch/augment.hpp"

namespace mbranch {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 28;

}  // namespace

DenseState::DenseState(const Instance& inst, std::vector<Weight> pi_init, std::ostream* trace)
    : inst_(&inst),
      base_(inst, trace),
      n_(inst.graph.num_nodes()),
      num_colors_(static_cast<std::size_t>(inst.coloring.num_colors())),
      offset_(std::move(pi_init)),
      shift_(num_colors_, 0) {
  if (offset_.size() != num_colors_) throw std::invalid_argument("one potential per color expected");
  const auto n = static_cast<std::size_t>(n_);
  if (n * n > kMaxCells || n * num_colors_ > kMaxCells) {
    throw std::length_error("instance too large for the dense engine");
  }
  arc_.assign(n * n, kNone);
  best_.assign(n * num_colors_, kNone);
  column_scratch_.assign(n, kNone);
  in_cycle_.assign(n, 0);
  alive_.resize(n);
  for (NodeId v = 0; v < n_; ++v) alive_[static_cast<std::size_t>(v)] = v;

  const Digraph& g = inst.graph;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    ArcId& cell = arc_[index(g.arc(a).tail, g.arc(a).head)];
    if (better(a, cell)) cell = a;
  }
  for (NodeId v = 0; v < n_; ++v) {
    for (NodeId u = 0; u < n_; ++u) {
      const ArcId a = arc_matrix(v, u);
      if (a == kNone) continue;
      ArcId& cell = best_[static_cast<std::size_t>(v) * num_colors_ +
                          static_cast<std::size_t>(inst.coloring.color_of(u))];
      if (better(a, cell)) cell = a;
    }
  }
}

Weight DenseState::reduced_weight(ArcId a) const {
  const Arc& arc = inst_->graph.arc(a);
  const ColorId c = inst_->coloring.color_of(arc.head);
  return arc.weight - offset_[static_cast<std::size_t>(c)] -
         shift_[static_cast<std::size_t>(class_of_color(c))];
}

Weight DenseState::potential(ColorId c) const {
  return offset_[static_cast<std::size_t>(c)] + shift_[static_cast<std::size_t>(class_of_color(c))];
}

bool DenseState::better(ArcId a, ArcId b) const {
  if (a == kNone) return false;
  if (b == kNone) return true;
  const Weight ra = reduced_weight(a);
  const Weight rb = reduced_weight(b);
  return ra < rb || (ra == rb && a < b);
}

std::optional<HeapEntry> DenseState::min_into_class(ColorId cls) const {
  ArcId best = kNone;
  for (NodeId v : alive_) {
    const ArcId a = best_arc(v, cls);
    if (better(a, best)) best = a;
  }
  if (best == kNone) return std::nullopt;
  return HeapEntry{reduced_weight(best), best};
}

ContractResult DenseState::contract(const Cycle& cycle) {
  const std::vector<NodeId>& zs = cycle.nodes;
  std::vector<ColorId> absorbed;
  absorbed.reserve(zs.size());
  for (NodeId x : zs) {
    in_cycle_[static_cast<std::size_t>(x)] = 1;
    absorbed.push_back(base_.current_class(x));
  }
  // Move each absorbed class's shift into its colors' offsets so the merged
  // class starts from a zero shift without changing any reduced weight.
  for (ColorId r : absorbed) {
    Weight& s = shift_[static_cast<std::size_t>(r)];
    if (s == 0) continue;
    for (ColorId c : base_.coloring().classes().members(r)) offset_[static_cast<std::size_t>(c)] += s;
    s = 0;
  }
  for (NodeId v : alive_) {
    if (in_cycle_[static_cast<std::size_t>(v)]) continue;
    ArcId best = kNone;
    for (ColorId r : absorbed) {
      ++touches_;
      const ArcId a = best_arc(v, r);
      if (better(a, best)) best = a;
    }
    column_scratch_[static_cast<std::size_t>(v)] = best;
  }

  ContractResult cr = base_.contract(cycle);
  const NodeId z = cr.composite;
  const auto cls = static_cast<std::size_t>(cr.merged_class);

  for (NodeId v : alive_) {
    if (in_cycle_[static_cast<std::size_t>(v)]) continue;
    best_[static_cast<std::size_t>(v) * num_colors_ + cls] = column_scratch_[static_cast<std::size_t>(v)];
    ArcId out = kNone;
    ArcId in = kNone;
    for (NodeId u : zs) {
      touches_ += 2;
      if (better(arc_matrix(u, v), out)) out = arc_matrix(u, v);
      if (better(arc_matrix(v, u), in)) in = arc_matrix(v, u);
    }
    arc_[index(z, v)] = out;
    arc_[index(v, z)] = in;
  }
  arc_[index(z, z)] = kNone;

  std::erase_if(alive_, [&](NodeId v) { return in_cycle_[static_cast<std::size_t>(v)] && v != z; });

  const auto row = static_cast<std::size_t>(z) * num_colors_;
  std::fill(best_.begin() + static_cast<std::ptrdiff_t>(row),
            best_.begin() + static_cast<std::ptrdiff_t>(row + num_colors_), kNone);
  for (NodeId v : alive_) {
    if (v == z) continue;
    ++touches_;
    const ArcId a = arc_matrix(z, v);
    ArcId& cell = best_[row + static_cast<std::size_t>(base_.current_class(v))];
    if (better(a, cell)) cell = a;
  }

  for (NodeId x : zs) in_cycle_[static_cast<std::size_t>(x)] = 0;
  return cr;
}

void DenseState::check_invariants() const {
  base_.check_invariants();
  const Digraph& g = inst_->graph;
  std::vector<ArcId> expect(arc_.size(), kNone);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (base_.is_dead(a)) continue;
    ArcId& cell = expect[index(base_.current_node(g.arc(a).tail), base_.current_node(g.arc(a).head))];
    if (better(a, cell)) cell = a;
  }
  for (NodeId u : alive_) {
    if (base_.current_node(u) != u) throw std::logic_error("dense node list holds a dead node");
    for (NodeId v : alive_) {
      if (arc_[index(u, v)] != expect[index(u, v)]) throw std::logic_error("arc matrix out of date");
    }
  }
  for (NodeId v : alive_) {
    std::vector<ArcId> row(num_colors_, kNone);
    for (NodeId u : alive_) {
      if (u == v) continue;
      ArcId& cell = row[static_cast<std::size_t>(base_.current_class(u))];
      if (better(arc_matrix(v, u), cell)) cell = arc_matrix(v, u);
    }
    for (NodeId u : alive_) {
      const ColorId c = base_.current_class(u);
      if (best_arc(v, c) != row[static_cast<std::size_t>(c)]) throw std::logic_error("class matrix out of date");
    }
  }
}

WmbResult solve_wmb_dense(const Instance& inst, const SolveOptions& options) {
  const AugmentedInstance aug = augment_with_root(inst);
  const Instance& ai = aug.instance;
  const auto num_colors = static_cast<std::size_t>(ai.coloring.num_colors());
  std::vector<Weight> pi_init = initial_potentials(ai);

  DenseState state(ai, pi_init, options.trace);
  std::vector<std::uint8_t> open(num_colors, 1);
  std::vector<DualBump> bumps;
  std::int64_t contractions = 0;
  for (;;) {
    const auto it = std::find(open.begin(), open.end(), std::uint8_t{1});
    if (it == open.end()) break;
    const auto k = static_cast<ColorId>(it - open.begin());
    const std::optional<HeapEntry> best = state.min_into_class(k);
    if (!best) {
      *it = 0;
      continue;
    }
    if (best->key < 0) throw std::logic_error("negative reduced weight");
    if (best->key > 0) {
      state.raise_class(k, best->key);
      const EntityId e = state.base().class_entity(k);
      bumps.push_back(DualBump{e, best->key});
      if (options.trace) *options.trace << "dual e" << e + 1 << " eps " << best->key << '\n';
    }

    AddResult added = state.try_add_arc(best->item);
    if (added.extended) {
      *it = 0;
    } else {
      const ContractResult cr = state.contract(added.cycle);
      ++contractions;
      for (ColorId c : cr.absorbed_classes) open[static_cast<std::size_t>(c)] = 0;
      open[static_cast<std::size_t>(cr.merged_class)] = 1;
    }
    if (options.self_check) state.check_invariants();
  }

  WmbResult result;
  result.augmented_branching = state.base().restore();
  for (ArcId a : result.augmented_branching) {
    if (!aug.is_auxiliary(a)) result.branching.push_back(a);
  }
  result.cardinality = static_cast<std::int64_t>(result.branching.size());
  result.weight = total_weight(inst.graph, result.branching);
  result.counters.dsu_unions = state.base().union_count();
  result.counters.contractions = contractions;
  result.counters.dual_steps = static_cast<std::int64_t>(bumps.size());
  result.counters.touch_work = state.touch_work();
  result.certificate = make_certificate(state.base().log(), aug.aux_weight, std::move(pi_init), std::move(bumps));
  return result;
}

}  // namespace mbranch
