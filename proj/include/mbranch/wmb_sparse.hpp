#ifndef MBRANCH_WMB_SPARSE_HPP_
#define MBRANCH_WMB_SPARSE_HPP_

#include <optional>

#include "mbranch/meld_heap.hpp"
#include "mbranch/rainbow.hpp"
#include "mbranch/solver.hpp"

namespace mbranch {

// Dual step on one class heap. Discards dead entries from the front until an
// alive minimum surfaces; its key is ε. A positive ε is subtracted from the
// whole heap so that the minimum becomes tight. Returns ε (0 when a tight
// arc was already present), or nullopt if the heap ran out.
template <class IsDead>
std::optional<Weight> dual_adjust(MeldHeapForest& forest, MeldHeapForest::Heap& heap, IsDead&& is_dead) {
  for (;;) {
    const std::optional<HeapEntry> front = forest.top(heap);
    if (!front) return std::nullopt;
    if (!is_dead(front->item)) {
      if (front->key > 0) forest.shift(heap, -front->key);
      return front->key;
    }
    forest.extract_min(heap);
  }
}

// Minimum-weight maximum-cardinality rainbow matroid branching in
// O(m log n): root augmentation, one mergeable heap of reduced weights per
// class, virtual contraction.
WmbResult solve_wmb_sparse(const Instance& inst, const SolveOptions& options = {});

}  // namespace mbranch

#endif  // MBRANCH_WMB_SPARSE_HPP_
