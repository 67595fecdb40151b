#ifndef MBRANCH_SOLVER_HPP_
#define MBRANCH_SOLVER_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "mbranch/certificate.hpp"
#include "mbranch/graph.hpp"

namespace mbranch {

struct SolveCounters {
  std::int64_t heap_insertions = 0;
  std::int64_t heap_extractions = 0;
  std::int64_t heap_melds = 0;
  std::int64_t dsu_unions = 0;
  std::int64_t contractions = 0;
  std::int64_t dual_steps = 0;
  std::int64_t touch_work = 0;  // dense engine: matrix cells read while contracting
};

struct SolveOptions {
  std::ostream* trace = nullptr;  // one line per add / contract / dual / restore event
  bool self_check = false;        // re-verify internal invariants after every step (slow)
};

struct CmbResult {
  std::vector<ArcId> branching;  // ascending
  std::int64_t cardinality = 0;
  Weight weight = 0;
  SolveCounters counters;
};

struct WmbResult {
  std::vector<ArcId> branching;  // original arcs, ascending
  std::int64_t cardinality = 0;
  Weight weight = 0;
  // Branching of the root-augmented instance (original arcs plus the
  // auxiliary arcs used), which is what the certificate speaks about.
  std::vector<ArcId> augmented_branching;
  DualCertificate certificate;
  SolveCounters counters;
};

}  // namespace mbranch

#endif  // MBRANCH_SOLVER_HPP_
