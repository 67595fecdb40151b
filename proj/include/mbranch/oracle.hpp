#ifndef MBRANCH_ORACLE_HPP_
#define MBRANCH_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbranch/certificate.hpp"
#include "mbranch/rainbow.hpp"

namespace mbranch {

inline constexpr std::int32_t kMaxEnumerateArcs = 20;
inline constexpr std::int32_t kMaxExchangeArcs = 60;

// In-degree at most one and no undirected cycle. False on repeated or unknown ids.
bool is_branching(const Digraph& g, std::span<const ArcId> arcs);
// A branching whose heads have pairwise distinct colors.
bool is_matroid_branching(const Instance& inst, std::span<const ArcId> arcs);

struct OptimumResult {
  std::int64_t cardinality = 0;
  Weight weight = 0;
  std::vector<ArcId> witness;  // ascending; lexicographically smallest optimum
};

// Exhaustive scan over all arc subsets. Throws std::length_error when
// the instance has more than kMaxEnumerateArcs arcs.
OptimumResult enumerate_optimum(const Instance& inst);

struct AuditCheck {
  std::string name;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool passed() const;
  // One "audit <check> pass|FAIL" line per check, each violation on its
  // own indented line after it, then "audit verdict pass|FAIL".
  std::string render() const;
};

// Checks a weighted solver's output on `original`. The branching and the
// certificate describe the root-augmented instance. Checks:
//   primal          the branching is a matroid branching
//   xi-sign         every set potential is non-negative
//   dual-feasible   every reduced weight is non-negative
//   cs1             every branching arc has zero reduced weight
//   cs2             a set with positive potential holds |Q| - 1 branching arcs
//   equality-rows   each color with an inbound arc is entered exactly once
// Throws std::invalid_argument if the certificate does not fit the instance.
AuditReport audit_certificate(const Instance& original, std::span<const ArcId> augmented_branching,
                              const DualCertificate& cert);

// Maximality of a matroid branching by reachability in the exchange
// digraph of the arc matroid (in-degree plus colors) and the graphic
// matroid. Throws std::length_error above kMaxExchangeArcs arcs and
// std::invalid_argument if `branching` is not a matroid branching.
bool is_maximum_by_exchange(const Instance& inst, std::span<const ArcId> branching);

}  // namespace mbranch

#endif  // MBRANCH_ORACLE_HPP_
