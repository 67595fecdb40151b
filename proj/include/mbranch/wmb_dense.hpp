#ifndef MBRANCH_WMB_DENSE_HPP_
#define MBRANCH_WMB_DENSE_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "mbranch/contraction.hpp"
#include "mbranch/meld_heap.hpp"
#include "mbranch/rainbow.hpp"
#include "mbranch/solver.hpp"

namespace mbranch {

// Matrix form of the contracted graph, on naive DSUs.
//
//   arc_matrix(u, v)  cheapest alive arc from current node u to current node v
//   best_arc(v, cls)  cheapest alive arc from current node v into class cls
//
// "Cheapest" is by reduced weight, ties by arc id. Reduced weights are
// read as w(a) − offset(color of head) − shift(class of that color), so a
// dual step only touches one shift.
class DenseState {
 public:
  // pi_init holds the starting potential of each color. `inst` must outlive the state.
  DenseState(const Instance& inst, std::vector<Weight> pi_init, std::ostream* trace = nullptr);

  const ContractionState<NaiveDsu>& base() const { return base_; }
  std::span<const NodeId> current_nodes() const { return alive_; }

  ArcId arc_matrix(NodeId u, NodeId v) const { return arc_[index(u, v)]; }
  ArcId best_arc(NodeId v, ColorId cls) const {
    return best_[static_cast<std::size_t>(v) * num_colors_ + static_cast<std::size_t>(cls)];
  }
  Weight reduced_weight(ArcId a) const;
  Weight potential(ColorId c) const;

  // Cheapest alive arc entering class cls, from a scan of its column.
  std::optional<HeapEntry> min_into_class(ColorId cls) const;
  void raise_class(ColorId cls, Weight eps) { shift_[static_cast<std::size_t>(cls)] += eps; }

  AddResult try_add_arc(ArcId a) { return base_.try_add_arc(a); }
  // Merges the cycle's color columns, then folds the rows and columns of the
  // cycle nodes into the composite and rebuilds its best_arc row.
  ContractResult contract(const Cycle& cycle);

  // Matrix cells read by contractions so far.
  std::int64_t touch_work() const { return touches_; }

  // Rebuilds both matrices by brute force and compares. Throws std::logic_error.
  void check_invariants() const;

 private:
  std::size_t index(NodeId u, NodeId v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  ColorId class_of_color(ColorId c) const { return base_.coloring().classes().find(c); }
  bool better(ArcId a, ArcId b) const;

  const Instance* inst_;
  ContractionState<NaiveDsu> base_;
  std::int32_t n_;
  std::size_t num_colors_;
  std::vector<ArcId> arc_;
  std::vector<ArcId> best_;
  std::vector<Weight> offset_;  // per color
  std::vector<Weight> shift_;   // per class root
  std::vector<NodeId> alive_;
  std::vector<ArcId> column_scratch_;
  std::vector<std::uint8_t> in_cycle_;
  std::int64_t touches_ = 0;
};

// Same contract as solve_wmb_sparse, in O(n^2) time and memory.
WmbResult solve_wmb_dense(const Instance& inst, const SolveOptions& options = {});

}  // namespace mbranch

#endif  // MBRANCH_WMB_DENSE_HPP_
