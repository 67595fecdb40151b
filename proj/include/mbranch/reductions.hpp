#ifndef MBRANCH_REDUCTIONS_HPP_
#define MBRANCH_REDUCTIONS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mbranch/rainbow.hpp"

namespace mbranch {

// Bipartite graph (X, Y, E) in which every y has degree at most 2.
struct BipartiteEdge {
  std::int32_t y;
  std::int32_t x;
  Weight weight;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

struct BipartiteInstance {
  std::int32_t num_x = 0;
  std::int32_t num_y = 0;
  std::vector<BipartiteEdge> edges;

  friend bool operator==(const BipartiteInstance&, const BipartiteInstance&) = default;
};

// source_edge[a] is the edge behind gadget arc a.
struct BackMap {
  std::vector<std::int32_t> source_edge;

  friend bool operator==(const BackMap&, const BackMap&) = default;
};

struct Reduction {
  Instance instance;
  BackMap back;
};

// Two gadget nodes y1 = 2j, y2 = 2j + 1 for the j-th y of nonzero degree.
// The first edge of y becomes y1 -> y2, the second y2 -> y1; a gadget node
// entered by the arc of edge {y, x} gets color x, a gadget node without an
// inbound arc gets a fresh color of its own. An instance with no edges
// reduces to a single isolated node.
// Throws std::invalid_argument on a bad id or a y of degree above 2.
Reduction reduce_matching(const BipartiteInstance& b);

// Edge ids of the chosen gadget arcs, ascending. Throws std::out_of_range
// for an arc the back-map does not know.
std::vector<std::int32_t> extract_matching(std::span<const ArcId> branching, const BackMap& back);

// Undirected edge {u, v} with the cost of orienting it either way.
struct OrientationEdge {
  NodeId u;
  NodeId v;
  Weight forward;   // u -> v
  Weight backward;  // v -> u

  friend bool operator==(const OrientationEdge&, const OrientationEdge&) = default;
};

struct OrientationInstance {
  std::int32_t num_nodes = 0;
  std::vector<OrientationEdge> edges;

  friend bool operator==(const OrientationInstance&, const OrientationInstance&) = default;
};

// Edge e becomes y = e with bipartite edges 2e = {e, v} (orienting u -> v)
// and 2e + 1 = {e, u} (orienting v -> u); graph nodes become X.
BipartiteInstance orientation_to_bipartite(const OrientationInstance& o);

// Throws std::invalid_argument on a bad id or a self-loop edge.
Reduction reduce_orientation(const OrientationInstance& o);

struct OrientedEdge {
  std::int32_t edge;
  NodeId tail;
  NodeId head;
  Weight weight;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// Oriented edges, ascending by edge id.
std::vector<OrientedEdge> extract_orientation(std::span<const ArcId> branching, const BackMap& back,
                                              const OrientationInstance& o);

}  // namespace mbranch

#endif  // MBRANCH_REDUCTIONS_HPP_
