#include "mbranch/augment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mbranch {

AugmentedInstance augment_with_root(const Instance& inst) {
  const Digraph& g = inst.graph;
  const std::int32_t n = g.num_nodes();
  // Keep every reachable quantity (branching weights, duals) below 2^62.
  const Weight limit = (Weight{1} << 62) / (static_cast<Weight>(n) + 2);
  Weight abs_sum = 0;
  for (const Arc& a : g.arcs()) {
    const Weight w = a.weight < 0 ? -a.weight : a.weight;
    if (a.weight == std::numeric_limits<Weight>::min() || w >= limit - abs_sum) {
      throw std::overflow_error("arc weights too large for exact arithmetic");
    }
    abs_sum += w;
  }

  AugmentedInstance out;
  out.original_nodes = n;
  out.original_arcs = g.num_arcs();
  out.aux_weight = abs_sum + 1;

  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  arcs.reserve(arcs.size() + static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) arcs.push_back(Arc{n, v, out.aux_weight});

  std::vector<ColorId> colors(inst.coloring.colors().begin(), inst.coloring.colors().end());
  colors.push_back(inst.coloring.num_colors());
  out.instance = make_instance(Digraph(n + 1, std::move(arcs)),
                               Coloring(std::move(colors), inst.coloring.num_colors() + 1));
  return out;
}

std::vector<Weight> initial_potentials(const Instance& inst) {
  std::vector<Weight> pi(static_cast<std::size_t>(inst.coloring.num_colors()), std::numeric_limits<Weight>::max());
  for (const Arc& a : inst.graph.arcs()) {
    Weight& p = pi[static_cast<std::size_t>(inst.coloring.color_of(a.head))];
    p = std::min(p, a.weight);
  }
  for (Weight& p : pi) {
    if (p == std::numeric_limits<Weight>::max()) p = 0;
  }
  return pi;
}

}  // namespace mbranch
