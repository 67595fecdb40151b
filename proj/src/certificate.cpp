#include "mbranch/certificate.hpp"

#include <stdexcept>

namespace mbranch {

namespace {

// Σ of bumps applied to each entity and all of its ancestors. Parents
// always have larger ids than their children.
std::vector<Weight> bumps_to_root(const DualCertificate& cert) {
  const auto n = cert.entity_parent.size();
  std::vector<Weight> total(n, 0);
  for (const DualBump& b : cert.bump_log) {
    if (b.entity < 0 || static_cast<std::size_t>(b.entity) >= n) {
      throw std::invalid_argument("bump references an unknown class entity");
    }
    total[static_cast<std::size_t>(b.entity)] += b.eps;
  }
  for (std::size_t e = n; e-- > 0;) {
    const EntityId p = cert.entity_parent[e];
    if (p != kNone) total[e] += total[static_cast<std::size_t>(p)];
  }
  return total;
}

}  // namespace

std::vector<Weight> DualCertificate::pi() const {
  if (pi_init.size() != static_cast<std::size_t>(num_colors)) {
    throw std::invalid_argument("certificate color count mismatch");
  }
  const std::vector<Weight> up = bumps_to_root(*this);
  std::vector<Weight> out(pi_init);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] += up[c];
  return out;
}

std::vector<Weight> DualCertificate::xi() const {
  if (entity_parent.size() != static_cast<std::size_t>(num_colors) + set_parent.size()) {
    throw std::invalid_argument("certificate entity forest does not match its sets");
  }
  const std::vector<Weight> up = bumps_to_root(*this);
  // Set i shares its lifetime with the chain of entities from its own class
  // up to (excluding) the class of the set that absorbs it.
  std::vector<Weight> out(set_parent.size());
  for (std::size_t i = 0; i < set_parent.size(); ++i) {
    const auto own = static_cast<std::size_t>(num_colors) + i;
    const std::int32_t p = set_parent[i];
    out[i] = up[own] - (p == kNone ? 0 : up[static_cast<std::size_t>(num_colors + p)]);
  }
  return out;
}

DualCertificate make_certificate(const ContractionLog& log, Weight aux_weight, std::vector<Weight> pi_init,
                                 std::vector<DualBump> bump_log) {
  DualCertificate cert;
  cert.aux_weight = aux_weight;
  cert.num_colors = log.num_colors;
  cert.pi_init = std::move(pi_init);
  cert.bump_log = std::move(bump_log);
  cert.entity_parent = log.entity_parent;
  cert.node_set = log.node_set;
  cert.set_parent = log.set_parent;
  return cert;
}

}  // namespace mbranch
