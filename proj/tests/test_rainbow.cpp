#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mbranch/generator.hpp"
#include "mbranch/rainbow.hpp"

using namespace mbranch;

TEST_CASE("independence means pairwise distinct colors") {
  const Coloring c({0, 0, 1}, 2);
  CHECK(is_independent(c, std::vector<NodeId>{0, 2}));
  CHECK_FALSE(is_independent(c, std::vector<NodeId>{0, 1}));
  CHECK(is_independent(c, std::vector<NodeId>{}));
}

TEST_CASE("coloring validation") {
  CHECK_THROWS_AS(Coloring({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Coloring({-1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(build_graph(2, {}), Coloring({0}, 1)), std::invalid_argument);
  CHECK(Coloring({1, 0, 1}, 3).class_members(1) == std::vector<NodeId>{0, 2});
  CHECK(Coloring({1, 0, 1}, 3).class_members(2).empty());
}

TEST_CASE("merging two singleton colors") {
  MergeableColoring<RankDsu> mc(Coloring({0, 1, 2}, 3));
  const ColorId r = mc.merge_classes(std::vector<NodeId>{0, 1});
  CHECK(mc.class_of(0) == r);
  CHECK(mc.class_of(1) == r);
  CHECK(mc.class_of(2) != r);
  CHECK(mc.class_of(2) == 2);
}

TEST_CASE("nodes sharing a merged color follow the merge") {
  MergeableColoring<NaiveDsu> mc(Coloring({0, 1, 1}, 2));
  const ColorId r = mc.merge_classes(std::vector<NodeId>{0, 1});
  CHECK(mc.class_of(0) == r);
  CHECK(mc.class_of(1) == r);
  CHECK(mc.class_of(2) == r);
}

TEST_CASE("merging a dependent or empty set is refused") {
  MergeableColoring<RankDsu> mc(Coloring({0, 0}, 1));
  CHECK_THROWS_AS(mc.merge_classes(std::vector<NodeId>{0, 1}), std::logic_error);
  CHECK_THROWS_AS(mc.merge_classes(std::vector<NodeId>{}), std::logic_error);
}

TEST_CASE("merging an already merged class changes nothing") {
  MergeableColoring<RankDsu> mc(Coloring({0, 1, 2}, 3));
  const ColorId r = mc.merge_classes(std::vector<NodeId>{0, 1});
  const auto unions = mc.classes().union_count();
  CHECK(mc.merge_classes(std::vector<NodeId>{1}) == r);
  CHECK(mc.classes().union_count() == unions);
  CHECK(mc.class_of(2) == 2);
}

TEST_CASE_TEMPLATE("merged independence equals old independence with Z minus some element", Dsu, RankDsu, NaiveDsu) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::int32_t>(uniform_between(rng, 2, 6));
    const auto k = static_cast<std::int32_t>(uniform_between(rng, 1, n));
    std::vector<ColorId> colors(static_cast<std::size_t>(n));
    for (auto& c : colors) c = static_cast<ColorId>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    const Coloring base(colors, k);
    // Random independent Z.
    std::vector<NodeId> z;
    for (NodeId v = 0; v < n; ++v) {
      z.push_back(v);
      if (uniform_below(rng, 2) == 0 || !is_independent(base, z)) z.pop_back();
    }
    if (z.empty()) continue;
    MergeableColoring<Dsu> mc(base);
    mc.merge_classes(z);
    std::vector<NodeId> outside;
    for (NodeId v = 0; v < n; ++v) {
      if (std::find(z.begin(), z.end(), v) == z.end()) outside.push_back(v);
    }
    const auto w = outside.size();
    for (std::uint32_t mask = 0; mask < (1U << w); ++mask) {
      std::vector<NodeId> x;
      for (std::size_t i = 0; i < w; ++i) {
        if (mask >> i & 1U) x.push_back(outside[i]);
      }
      bool some_drop = false;
      for (std::size_t drop = 0; drop < z.size(); ++drop) {
        std::vector<NodeId> old = x;
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (j != drop) old.push_back(z[j]);
        }
        some_drop = some_drop || is_independent(base, old);
      }
      CHECK(mc.is_independent(x) == some_drop);
    }
  }
}
