#include "mbranch/cmb_solver.hpp"

#include <numeric>
#include <set>

#include "mbranch/contraction.hpp"
#include "mbranch/generator.hpp"
#include "mbranch/meld_heap.hpp"

namespace mbranch {

CmbResult solve_cmb(const Instance& inst, const CmbOptions& options) {
  const Digraph& g = inst.graph;
  const std::int32_t m = g.num_arcs();

  std::vector<Weight> priority(static_cast<std::size_t>(m));
  std::iota(priority.begin(), priority.end(), Weight{0});
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    shuffle_in_place(priority, rng);
  }

  ContractionState<RankDsu> state(inst, options.trace);
  MeldHeapForest forest(m);
  std::vector<MeldHeapForest::Heap> heaps(static_cast<std::size_t>(inst.coloring.num_colors()));
  for (ArcId a = 0; a < m; ++a) {
    forest.insert(heaps[static_cast<std::size_t>(inst.coloring.color_of(g.arc(a).head))], a,
                  priority[static_cast<std::size_t>(a)]);
  }
  // Uncovered classes that may still have an alive inbound arc.
  std::set<ColorId> open;
  for (std::size_t c = 0; c < heaps.size(); ++c) {
    if (!heaps[c].empty()) open.insert(static_cast<ColorId>(c));
  }

  std::int64_t contractions = 0;
  while (!open.empty()) {
    const ColorId k = *open.begin();
    auto& heap = heaps[static_cast<std::size_t>(k)];
    while (!heap.empty() && state.is_dead(forest.top(heap)->item)) forest.extract_min(heap);
    if (heap.empty()) {
      open.erase(open.begin());
      continue;
    }
    const ArcId a = forest.extract_min(heap)->item;
    AddResult added = state.try_add_arc(a);
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

  CmbResult result;
  result.branching = state.restore();
  result.cardinality = static_cast<std::int64_t>(result.branching.size());
  result.weight = total_weight(g, result.branching);
  result.counters.heap_insertions = forest.counters().insertions;
  result.counters.heap_extractions = forest.counters().extractions;
  result.counters.heap_melds = forest.counters().melds;
  result.counters.dsu_unions = state.union_count();
  result.counters.contractions = contractions;
  return result;
}

}  // namespace mbranch
