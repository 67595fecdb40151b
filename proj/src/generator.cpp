#include "mbranch/generator.hpp"

#include <limits>
#include <stdexcept>

namespace mbranch {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  const std::uint64_t r = span == std::numeric_limits<std::uint64_t>::max() ? rng() : uniform_below(rng, span + 1);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r);
}

Instance generate_instance(const GenParams& p) {
  if (p.nodes < 1) throw std::invalid_argument("need at least one node");
  if (p.colors < 1 || p.colors > p.nodes) throw std::invalid_argument("colors must lie in 1..nodes");
  if (p.arcs < 0) throw std::invalid_argument("arc count must be non-negative");
  if (p.arcs > 0 && p.nodes < 2) throw std::invalid_argument("arcs need at least two nodes");
  if (p.wmin > p.wmax) throw std::invalid_argument("wmin exceeds wmax");

  std::mt19937_64 rng(p.seed);
  const auto n = static_cast<std::size_t>(p.nodes);
  std::vector<ColorId> colors(n);
  for (std::size_t v = 0; v < n; ++v) {
    colors[v] = v < static_cast<std::size_t>(p.colors) ? static_cast<ColorId>(v)
                                                       : static_cast<ColorId>(uniform_below(rng, static_cast<std::uint64_t>(p.colors)));
  }
  shuffle_in_place(colors, rng);

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(p.arcs));
  for (std::int32_t i = 0; i < p.arcs; ++i) {
    const auto tail = static_cast<NodeId>(uniform_below(rng, n));
    auto head = static_cast<NodeId>(uniform_below(rng, n - 1));
    if (head >= tail) ++head;
    arcs.push_back(Arc{tail, head, uniform_between(rng, p.wmin, p.wmax)});
  }
  return make_instance(Digraph(p.nodes, std::move(arcs)), Coloring(std::move(colors), p.colors));
}

}  // namespace mbranch
