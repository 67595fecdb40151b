#ifndef MBRANCH_CERTIFICATE_HPP_
#define MBRANCH_CERTIFICATE_HPP_

#include <cstdint>
#include <vector>

#include "mbranch/contraction.hpp"
#include "mbranch/graph.hpp"

namespace mbranch {

// ε raised on the class `entity` by one dual step.
struct DualBump {
  EntityId entity;
  Weight eps;

  friend bool operator==(const DualBump&, const DualBump&) = default;
};

// Dual solution produced by the weighted solvers, stated over the
// root-augmented instance. A bump of ε on class entity E raises π(i) by ε
// for every input color i below E, and raises ξ(Q) by ε for every maximal
// contracted set Q whose composite is in class E at that moment. Both are
// recovered from the bump log and the two forests on demand.
struct DualCertificate {
  Weight aux_weight = 0;
  std::int32_t num_colors = 0;
  std::vector<Weight> pi_init;  // per color
  std::vector<DualBump> bump_log;
  std::vector<EntityId> entity_parent;
  std::vector<std::int32_t> node_set;
  std::vector<std::int32_t> set_parent;

  std::int32_t num_sets() const { return static_cast<std::int32_t>(set_parent.size()); }

  // Color potentials, one per color.
  std::vector<Weight> pi() const;
  // Set potentials, one per contracted set (record order).
  std::vector<Weight> xi() const;
};

// Copies the forests out of a finished contraction log.
DualCertificate make_certificate(const ContractionLog& log, Weight aux_weight, std::vector<Weight> pi_init,
                                 std::vector<DualBump> bump_log);

}  // namespace mbranch

#endif  // MBRANCH_CERTIFICATE_HPP_
