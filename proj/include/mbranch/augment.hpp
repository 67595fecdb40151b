#ifndef MBRANCH_AUGMENT_HPP_
#define MBRANCH_AUGMENT_HPP_

#include <vector>

#include "mbranch/rainbow.hpp"

namespace mbranch {

// Instance with an extra root node s = n carrying a fresh color k, and an
// arc (s, v) of weight aux_weight for every original node v. Auxiliary arc
// for v has id m + v.
struct AugmentedInstance {
  Instance instance;
  std::int32_t original_nodes = 0;
  std::int32_t original_arcs = 0;
  Weight aux_weight = 0;

  NodeId root() const { return original_nodes; }
  bool is_auxiliary(ArcId a) const { return a >= original_arcs; }
};

// aux_weight = 1 + Σ|w(a)|, large enough that a branching with fewer
// auxiliary arcs is always lighter. Throws std::overflow_error when the
// weights are too large for exact 64-bit arithmetic.
AugmentedInstance augment_with_root(const Instance& inst);

// Starting color potentials: the cheapest arc into each color, 0 for a color
// with no inbound arc. Every reduced weight is then non-negative.
std::vector<Weight> initial_potentials(const Instance& inst);

}  // namespace mbranch

#endif  // MBRANCH_AUGMENT_HPP_
