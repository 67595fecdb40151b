#ifndef MBRANCH_GRAPH_HPP_
#define MBRANCH_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace mbranch {

// Node, arc and color ids are 0-based inside the library. Text formats
// (see io.hpp) use 1-based ids.
using NodeId = std::int32_t;
using ArcId = std::int32_t;
using ColorId = std::int32_t;
using Weight = std::int64_t;

inline constexpr std::int32_t kNone = -1;

struct Arc {
  NodeId tail;
  NodeId head;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable directed multigraph. Parallel arcs are kept distinct by id,
// self-loops are rejected.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::int32_t num_nodes, std::vector<Arc> arcs);

  std::int32_t num_nodes() const { return num_nodes_; }
  std::int32_t num_arcs() const { return static_cast<std::int32_t>(arcs_.size()); }

  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
  std::span<const Arc> arcs() const { return arcs_; }

  // Ids of arcs whose head is v, ascending.
  std::span<const ArcId> incoming(NodeId v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.num_nodes_ == b.num_nodes_ && a.arcs_ == b.arcs_;
  }

 private:
  std::int32_t num_nodes_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int32_t> in_offset_;
  std::vector<ArcId> in_arcs_;
};

// Throws std::invalid_argument on n < 1, out-of-range endpoints or self-loops.
Digraph build_graph(std::int32_t num_nodes, std::vector<Arc> arcs);

// Arc-set queries over a node set X. Results are ascending arc ids.
std::vector<ArcId> gamma(const Digraph& g, std::span<const NodeId> nodes);
std::vector<ArcId> delta_in(const Digraph& g, std::span<const NodeId> nodes);
std::vector<ArcId> delta_out(const Digraph& g, std::span<const NodeId> nodes);

Weight total_weight(const Digraph& g, std::span<const ArcId> arcs);

}  // namespace mbranch

#endif  // MBRANCH_GRAPH_HPP_
