#include "mbranch/wmb_sparse.hpp"

#include <set>
#include <stdexcept>

#include "mbranch/augment.hpp"
#include "mbranch/contraction.hpp"

namespace mbranch {

WmbResult solve_wmb_sparse(const Instance& inst, const SolveOptions& options) {
  const AugmentedInstance aug = augment_with_root(inst);
  const Instance& ai = aug.instance;
  const Digraph& g = ai.graph;
  const auto num_colors = static_cast<std::size_t>(ai.coloring.num_colors());

  std::vector<Weight> pi_init = initial_potentials(ai);

  ContractionState<RankDsu> state(ai, options.trace);
  MeldHeapForest forest(g.num_arcs());
  std::vector<MeldHeapForest::Heap> heaps(num_colors);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const auto c = static_cast<std::size_t>(ai.coloring.color_of(g.arc(a).head));
    forest.insert(heaps[c], a, g.arc(a).weight - pi_init[c]);
  }
  std::set<ColorId> open;
  for (std::size_t c = 0; c < num_colors; ++c) {
    if (!heaps[c].empty()) open.insert(static_cast<ColorId>(c));
  }

  std::vector<DualBump> bumps;
  std::int64_t contractions = 0;
  auto is_dead = [&](std::int32_t a) { return state.is_dead(a); };
  while (!open.empty()) {
    const ColorId k = *open.begin();
    auto& heap = heaps[static_cast<std::size_t>(k)];
    const std::optional<Weight> eps = dual_adjust(forest, heap, is_dead);
    if (!eps) {
      open.erase(open.begin());
      continue;
    }
    if (*eps > 0) {
      bumps.push_back(DualBump{state.class_entity(k), *eps});
      if (options.trace) *options.trace << "dual e" << state.class_entity(k) + 1 << " eps " << *eps << '\n';
    }
    const HeapEntry tight = *forest.extract_min(heap);
    if (tight.key != 0) throw std::logic_error("primal step on a non-tight arc");

    AddResult added = state.try_add_arc(tight.item);
    if (added.extended) {
      open.erase(open.begin());
    } else {
      const ContractResult cr = state.contract(added.cycle);
      ++contractions;
      auto& merged = heaps[static_cast<std::size_t>(cr.merged_class)];
      for (ColorId c : cr.absorbed_classes) {
        open.erase(c);
        if (c != cr.merged_class) forest.meld(merged, heaps[static_cast<std::size_t>(c)]);
      }
      if (!merged.empty()) open.insert(cr.merged_class);
    }
    if (options.self_check) state.check_invariants();
  }

  WmbResult result;
  result.augmented_branching = state.restore();
  for (ArcId a : result.augmented_branching) {
    if (!aug.is_auxiliary(a)) result.branching.push_back(a);
  }
  result.cardinality = static_cast<std::int64_t>(result.branching.size());
  result.weight = total_weight(inst.graph, result.branching);
  result.counters.heap_insertions = forest.counters().insertions;
  result.counters.heap_extractions = forest.counters().extractions;
  result.counters.heap_melds = forest.counters().melds;
  result.counters.dsu_unions = state.union_count();
  result.counters.contractions = contractions;
  result.counters.dual_steps = static_cast<std::int64_t>(bumps.size());
  result.certificate = make_certificate(state.log(), aug.aux_weight, std::move(pi_init), std::move(bumps));
  return result;
}

}  // namespace mbranch
