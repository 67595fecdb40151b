#ifndef MBRANCH_RAINBOW_HPP_
#define MBRANCH_RAINBOW_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbranch/dsu.hpp"
#include "mbranch/graph.hpp"

namespace mbranch {

// Node coloring of the input; a node set is independent in the rainbow
// matroid iff its nodes have pairwise distinct colors.
class Coloring {
 public:
  Coloring() = default;
  // Throws std::invalid_argument if a color falls outside [0, num_colors).
  Coloring(std::vector<ColorId> color_of, std::int32_t num_colors);

  std::int32_t num_nodes() const { return static_cast<std::int32_t>(color_of_.size()); }
  std::int32_t num_colors() const { return num_colors_; }
  ColorId color_of(NodeId v) const { return color_of_[static_cast<std::size_t>(v)]; }
  std::span<const ColorId> colors() const { return color_of_; }

  // Nodes of color c, ascending.
  std::vector<NodeId> class_members(ColorId c) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<ColorId> color_of_;
  std::int32_t num_colors_ = 0;
};

bool is_independent(const Coloring& c, std::span<const NodeId> nodes);

struct Instance {
  Digraph graph;
  Coloring coloring;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws std::invalid_argument when the coloring does not cover the graph's nodes.
Instance make_instance(Digraph graph, Coloring coloring);

// Solver-local coloring under contraction. Classes are sets of colors kept in
// a DSU; every node points at a color, and its class is that color's root.
// Merging only coarsens the partition.
template <class Dsu>
class MergeableColoring {
 public:
  MergeableColoring() = default;
  explicit MergeableColoring(const Coloring& base)
      : node_color_(base.colors().begin(), base.colors().end()), classes_(base.num_colors()) {}

  std::int32_t num_colors() const { return classes_.size(); }

  ColorId class_of(NodeId v) const {
    return classes_.find(node_color_[static_cast<std::size_t>(v)]);
  }

  bool is_independent(std::span<const NodeId> nodes) const {
    std::vector<ColorId> seen;
    seen.reserve(nodes.size());
    for (NodeId v : nodes) seen.push_back(class_of(v));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }

  // Unites every class meeting `nodes` and returns the merged class root.
  // Throws std::logic_error if `nodes` is empty or dependent.
  ColorId merge_classes(std::span<const NodeId> nodes) {
    if (nodes.empty()) throw std::logic_error("merge_classes on an empty set");
    if (!is_independent(nodes)) throw std::logic_error("merge_classes on a dependent set");
    const ColorId first = class_of(nodes.front());
    for (NodeId v : nodes.subspan(1)) classes_.unite(first, class_of(v));
    return classes_.find(first);
  }

  // Points node v at class `cls` (used for the composite node of a contraction).
  void place_in_class(NodeId v, ColorId cls) { node_color_[static_cast<std::size_t>(v)] = cls; }

  const Dsu& classes() const { return classes_; }

 private:
  std::vector<ColorId> node_color_;
  Dsu classes_;
};

}  // namespace mbranch

#endif  // MBRANCH_RAINBOW_HPP_
