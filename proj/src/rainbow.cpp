#include "mbranch/rainbow.hpp"

#include <algorithm>

namespace mbranch {

Coloring::Coloring(std::vector<ColorId> color_of, std::int32_t num_colors)
    : color_of_(std::move(color_of)), num_colors_(num_colors) {
  if (num_colors_ < 0) throw std::invalid_argument("negative color count");
  for (std::size_t v = 0; v < color_of_.size(); ++v) {
    if (color_of_[v] < 0 || color_of_[v] >= num_colors_) {
      throw std::invalid_argument("node " + std::to_string(v + 1) + " has color out of range");
    }
  }
}

std::vector<NodeId> Coloring::class_members(ColorId c) const {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < color_of_.size(); ++v) {
    if (color_of_[v] == c) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

bool is_independent(const Coloring& c, std::span<const NodeId> nodes) {
  std::vector<ColorId> colors;
  colors.reserve(nodes.size());
  for (NodeId v : nodes) colors.push_back(c.color_of(v));
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

Instance make_instance(Digraph graph, Coloring coloring) {
  if (graph.num_nodes() != coloring.num_nodes()) {
    throw std::invalid_argument("coloring has " + std::to_string(coloring.num_nodes()) +
                                " nodes, graph has " + std::to_string(graph.num_nodes()));
  }
  return Instance{std::move(graph), std::move(coloring)};
}

}  // namespace mbranch
