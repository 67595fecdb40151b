#ifndef MBRANCH_TESTS_SUPPORT_HPP_
#define MBRANCH_TESTS_SUPPORT_HPP_

// Test-only helpers: compact instance builders and brute-force oracles
// written independently of the library code they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "mbranch/generator.hpp"
#include "mbranch/rainbow.hpp"
#include "mbranch/reductions.hpp"

namespace mbranch::test {

// Builds an instance from 1-based node ids and colors.
inline Instance make(std::int32_t n, const std::vector<std::int32_t>& colors_1based,
                     const std::vector<std::tuple<std::int32_t, std::int32_t, Weight>>& arcs_1based) {
  std::vector<Arc> arcs;
  for (const auto& [t, h, w] : arcs_1based) arcs.push_back(Arc{t - 1, h - 1, w});
  std::vector<ColorId> colors;
  ColorId k = 0;
  for (std::int32_t c : colors_1based) {
    colors.push_back(c - 1);
    k = std::max(k, c);
  }
  return make_instance(Digraph(n, std::move(arcs)), Coloring(std::move(colors), k));
}

// The small weighted example used across the suite.
inline Instance instance_i1() {
  return make(3, {1, 2, 2}, {{1, 2, 2}, {2, 3, 1}, {3, 1, 4}, {1, 3, 1}});
}

struct Best {
  std::int64_t cardinality = 0;
  Weight weight = 0;
};

inline bool better(std::int64_t card, Weight w, const Best& b) {
  return card > b.cardinality || (card == b.cardinality && w < b.weight);
}

// Minimum-weight maximum-cardinality branching with no color constraint,
// by scanning all arc subsets: in-degree <= 1 and an undirected forest.
inline Best brute_force_branching(const Digraph& g) {
  const std::int32_t m = g.num_arcs();
  const auto n = static_cast<std::size_t>(g.num_nodes());
  Best best;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<int> indeg(n, 0);
    std::vector<std::int32_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    bool ok = true;
    std::int64_t card = 0;
    Weight w = 0;
    for (std::int32_t a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1U)) continue;
      const Arc& arc = g.arc(a);
      if (++indeg[static_cast<std::size_t>(arc.head)] > 1) ok = false;
      // Relabel components directly; graphs here have at most a handful of nodes.
      const std::int32_t ct = comp[static_cast<std::size_t>(arc.tail)];
      const std::int32_t ch = comp[static_cast<std::size_t>(arc.head)];
      if (ct == ch) ok = false;
      for (auto& c : comp) {
        if (c == ch) c = ct;
      }
      ++card;
      w += arc.weight;
    }
    if (ok && better(card, w, best)) best = Best{card, w};
  }
  return best;
}

// Minimum-weight maximum-cardinality matching by scanning edge subsets.
inline Best brute_force_matching(const BipartiteInstance& b) {
  const auto e = static_cast<std::int32_t>(b.edges.size());
  Best best;
  for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
    std::vector<int> used_x(static_cast<std::size_t>(b.num_x), 0);
    std::vector<int> used_y(static_cast<std::size_t>(b.num_y), 0);
    bool ok = true;
    std::int64_t card = 0;
    Weight w = 0;
    for (std::int32_t i = 0; i < e; ++i) {
      if (!(mask >> i & 1U)) continue;
      const BipartiteEdge& edge = b.edges[static_cast<std::size_t>(i)];
      if (used_x[static_cast<std::size_t>(edge.x)]++ || used_y[static_cast<std::size_t>(edge.y)]++) ok = false;
      ++card;
      w += edge.weight;
    }
    if (ok && better(card, w, best)) best = Best{card, w};
  }
  return best;
}

// Every edge skipped, oriented u->v or v->u; each node entered at most once.
inline Best brute_force_orientation(const OrientationInstance& o) {
  const auto e = o.edges.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < e; ++i) total *= 3;
  Best best;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> indeg(static_cast<std::size_t>(o.num_nodes), 0);
    bool ok = true;
    std::int64_t card = 0;
    Weight w = 0;
    std::size_t rest = code;
    for (std::size_t i = 0; i < e; ++i, rest /= 3) {
      const OrientationEdge& edge = o.edges[i];
      const std::size_t choice = rest % 3;
      if (choice == 0) continue;
      const NodeId head = choice == 1 ? edge.v : edge.u;
      if (indeg[static_cast<std::size_t>(head)]++) ok = false;
      ++card;
      w += choice == 1 ? edge.forward : edge.backward;
    }
    if (ok && better(card, w, best)) best = Best{card, w};
  }
  return best;
}

// Parameters of the small random suite: n in [2,7], m in [0,15], k in [1,n], w in [-5,5].
inline GenParams small_params(std::mt19937_64& rng) {
  GenParams p;
  p.nodes = static_cast<std::int32_t>(uniform_between(rng, 2, 7));
  p.arcs = static_cast<std::int32_t>(uniform_between(rng, 0, 15));
  p.colors = static_cast<std::int32_t>(uniform_between(rng, 1, p.nodes));
  p.seed = rng();
  p.wmin = -5;
  p.wmax = 5;
  return p;
}

inline BipartiteInstance random_bipartite(std::mt19937_64& rng, std::int32_t max_y) {
  BipartiteInstance b;
  b.num_x = static_cast<std::int32_t>(uniform_between(rng, 1, 5));
  b.num_y = static_cast<std::int32_t>(uniform_between(rng, 0, max_y));
  for (std::int32_t y = 0; y < b.num_y; ++y) {
    const auto degree = uniform_between(rng, 0, 2);
    for (std::int64_t d = 0; d < degree; ++d) {
      b.edges.push_back(BipartiteEdge{y, static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(b.num_x))),
                                      uniform_between(rng, -5, 5)});
    }
  }
  shuffle_in_place(b.edges, rng);
  return b;
}

inline OrientationInstance random_orientation(std::mt19937_64& rng, std::int32_t max_edges) {
  OrientationInstance o;
  o.num_nodes = static_cast<std::int32_t>(uniform_between(rng, 2, 5));
  const auto e = uniform_between(rng, 0, max_edges);
  for (std::int64_t i = 0; i < e; ++i) {
    const auto u = static_cast<NodeId>(uniform_below(rng, static_cast<std::uint64_t>(o.num_nodes)));
    auto v = static_cast<NodeId>(uniform_below(rng, static_cast<std::uint64_t>(o.num_nodes - 1)));
    if (v >= u) ++v;
    o.edges.push_back(OrientationEdge{u, v, uniform_between(rng, -5, 5), uniform_between(rng, -5, 5)});
  }
  return o;
}

}  // namespace mbranch::test

#endif  // MBRANCH_TESTS_SUPPORT_HPP_
