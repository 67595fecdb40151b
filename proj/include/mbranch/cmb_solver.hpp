#ifndef MBRANCH_CMB_SOLVER_HPP_
#define MBRANCH_CMB_SOLVER_HPP_

#include <cstdint>

#include "mbranch/rainbow.hpp"
#include "mbranch/solver.hpp"

namespace mbranch {

struct CmbOptions : SolveOptions {
  // 0 scans arcs in ascending id; any other value scans them in a seeded
  // random order. Cardinality does not depend on the order.
  std::uint64_t seed = 0;
};

// Maximum-cardinality matroid branching by cycle contraction. Classes are
// served lowest class root first.
CmbResult solve_cmb(const Instance& inst, const CmbOptions& options = {});

}  // namespace mbranch

#endif  // MBRANCH_CMB_SOLVER_HPP_
