#include "mbranch/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mbranch {

Reduction reduce_matching(const BipartiteInstance& b) {
  if (b.num_x < 0 || b.num_y < 0) throw std::invalid_argument("negative side size");
  std::vector<std::vector<std::int32_t>> by_y(static_cast<std::size_t>(b.num_y));
  for (std::size_t e = 0; e < b.edges.size(); ++e) {
    const BipartiteEdge& edge = b.edges[e];
    if (edge.y < 0 || edge.y >= b.num_y || edge.x < 0 || edge.x >= b.num_x) {
      throw std::invalid_argument("edge " + std::to_string(e + 1) + " has an endpoint out of range");
    }
    auto& list = by_y[static_cast<std::size_t>(edge.y)];
    if (list.size() == 2) throw std::invalid_argument("y node " + std::to_string(edge.y + 1) + " has degree above 2");
    list.push_back(static_cast<std::int32_t>(e));
  }

  std::vector<Arc> arcs;
  std::vector<ColorId> colors;
  Reduction out;
  ColorId fresh = b.num_x;
  for (const auto& list : by_y) {
    if (list.empty()) continue;
    const auto y1 = static_cast<NodeId>(colors.size());
    const NodeId y2 = y1 + 1;
    const BipartiteEdge& e1 = b.edges[static_cast<std::size_t>(list[0])];
    arcs.push_back(Arc{y1, y2, e1.weight});
    out.back.source_edge.push_back(list[0]);
    if (list.size() == 2) {
      const BipartiteEdge& e2 = b.edges[static_cast<std::size_t>(list[1])];
      arcs.push_back(Arc{y2, y1, e2.weight});
      out.back.source_edge.push_back(list[1]);
      colors.push_back(e2.x);
    } else {
      colors.push_back(fresh++);
    }
    colors.push_back(e1.x);
  }
  if (colors.empty()) colors.push_back(fresh++);
  const auto n = static_cast<std::int32_t>(colors.size());
  out.instance = make_instance(Digraph(n, std::move(arcs)), Coloring(std::move(colors), fresh));
  return out;
}

std::vector<std::int32_t> extract_matching(std::span<const ArcId> branching, const BackMap& back) {
  std::vector<std::int32_t> edges;
  for (ArcId a : branching) {
    if (a < 0 || static_cast<std::size_t>(a) >= back.source_edge.size()) {
      throw std::out_of_range("arc " + std::to_string(a + 1) + " is not a gadget arc");
    }
    edges.push_back(back.source_edge[static_cast<std::size_t>(a)]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

BipartiteInstance orientation_to_bipartite(const OrientationInstance& o) {
  BipartiteInstance b;
  b.num_x = o.num_nodes;
  b.num_y = static_cast<std::int32_t>(o.edges.size());
  for (std::size_t e = 0; e < o.edges.size(); ++e) {
    const OrientationEdge& edge = o.edges[e];
    if (edge.u < 0 || edge.u >= o.num_nodes || edge.v < 0 || edge.v >= o.num_nodes) {
      throw std::invalid_argument("edge " + std::to_string(e + 1) + " has an endpoint out of range");
    }
    if (edge.u == edge.v) throw std::invalid_argument("edge " + std::to_string(e + 1) + " is a self-loop");
    const auto y = static_cast<std::int32_t>(e);
    b.edges.push_back(BipartiteEdge{y, edge.v, edge.forward});
    b.edges.push_back(BipartiteEdge{y, edge.u, edge.backward});
  }
  return b;
}

Reduction reduce_orientation(const OrientationInstance& o) {
  return reduce_matching(orientation_to_bipartite(o));
}

std::vector<OrientedEdge> extract_orientation(std::span<const ArcId> branching, const BackMap& back,
                                              const OrientationInstance& o) {
  std::vector<OrientedEdge> out;
  for (std::int32_t be : extract_matching(branching, back)) {
    const std::int32_t e = be / 2;
    if (e >= static_cast<std::int32_t>(o.edges.size())) throw std::out_of_range("back-map edge out of range");
    const OrientationEdge& edge = o.edges[static_cast<std::size_t>(e)];
    if (be % 2 == 0) {
      out.push_back(OrientedEdge{e, edge.u, edge.v, edge.forward});
    } else {
      out.push_back(OrientedEdge{e, edge.v, edge.u, edge.backward});
    }
  }
  return out;
}

}  // namespace mbranch
