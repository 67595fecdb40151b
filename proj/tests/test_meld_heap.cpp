#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mbranch/generator.hpp"
#include "mbranch/meld_heap.hpp"

using namespace mbranch;

namespace {

using Heap = MeldHeapForest::Heap;

}  // namespace

TEST_CASE("insert then read the minimum") {
  MeldHeapForest f(4);
  Heap h;
  f.insert(h, 0, 5);
  CHECK(*f.top(h) == HeapEntry{5, 0});
  f.insert(h, 1, 3);
  CHECK(*f.top(h) == HeapEntry{3, 1});
}

TEST_CASE("shift only affects items present at shift time") {
  MeldHeapForest f(4);
  Heap h;
  f.insert(h, 0, 5);
  f.shift(h, -2);
  f.insert(h, 1, 4);
  CHECK(*f.extract_min(h) == HeapEntry{3, 0});
  CHECK(*f.extract_min(h) == HeapEntry{4, 1});
}

TEST_CASE("extract_min") {
  MeldHeapForest f(4);
  Heap h;
  CHECK_FALSE(f.extract_min(h).has_value());
  f.insert(h, 0, 5);
  f.insert(h, 1, 3);
  CHECK(*f.extract_min(h) == HeapEntry{3, 1});
  Heap g;
  f.insert(g, 2, 5);
  f.shift(g, -5);
  CHECK(*f.extract_min(g) == HeapEntry{0, 2});
  CHECK(g.empty());
}

TEST_CASE("shift") {
  MeldHeapForest f(2);
  Heap h;
  f.shift(h, -4);
  CHECK(h.empty());
  f.insert(h, 0, 5);
  f.shift(h, -3);
  CHECK(f.top(h)->key == 2);
  Heap g;
  f.insert(g, 1, 5);
  for (int i = 0; i < 3; ++i) f.shift(g, -1);
  CHECK(f.top(g)->key == 2);
}

TEST_CASE("meld") {
  MeldHeapForest f(4);
  Heap empty, b;
  f.insert(b, 1, 3);
  f.meld(empty, b);
  CHECK(b.empty());
  CHECK(*f.top(empty) == HeapEntry{3, 1});

  Heap h1, h2;
  f.insert(h1, 0, 5);
  f.shift(h1, -4);
  f.insert(h2, 2, 2);
  f.meld(h1, h2);
  CHECK(h1.size == 2);
  CHECK(*f.extract_min(h1) == HeapEntry{1, 0});
  CHECK(*f.extract_min(h1) == HeapEntry{2, 2});
}

TEST_CASE("misuse is rejected") {
  MeldHeapForest f(2);
  Heap h, g;
  f.insert(h, 0, 1);
  CHECK_THROWS_AS(f.insert(g, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(f.insert(g, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(f.meld(h, h), std::invalid_argument);
}

TEST_CASE("item ids can be reused after extraction") {
  MeldHeapForest f(1);
  Heap h;
  f.insert(h, 0, 7);
  f.extract_min(h);
  CHECK_FALSE(f.contains(0));
  f.insert(h, 0, 2);
  CHECK(*f.top(h) == HeapEntry{2, 0});
}

TEST_CASE("random operation sequences match a flat reference") {
  std::mt19937_64 rng(17);
  constexpr int kHeaps = 3;
  constexpr std::int32_t kItems = 24;
  for (int seq = 0; seq < 10000; ++seq) {
    MeldHeapForest f(kItems);
    std::vector<Heap> heaps(kHeaps);
    std::vector<std::vector<HeapEntry>> ref(kHeaps);
    std::vector<std::int32_t> free_items;
    for (std::int32_t i = kItems; i-- > 0;) free_items.push_back(i);
    for (int op = 0; op < 30; ++op) {
      const auto j = static_cast<std::size_t>(uniform_below(rng, kHeaps));
      switch (uniform_below(rng, 4)) {
        case 0:
          if (!free_items.empty()) {
            const std::int32_t item = free_items.back();
            free_items.pop_back();
            const Weight key = uniform_between(rng, -5, 5);
            f.insert(heaps[j], item, key);
            ref[j].push_back(HeapEntry{key, item});
          }
          break;
        case 1: {
          const std::optional<HeapEntry> got = f.extract_min(heaps[j]);
          if (ref[j].empty()) {
            REQUIRE_FALSE(got.has_value());
            break;
          }
          const auto it = std::min_element(ref[j].begin(), ref[j].end(), [](const HeapEntry& a, const HeapEntry& b) {
            return a.key < b.key || (a.key == b.key && a.item < b.item);
          });
          REQUIRE(got.has_value());
          REQUIRE(*got == *it);
          free_items.push_back(it->item);
          ref[j].erase(it);
          break;
        }
        case 2: {
          const Weight d = uniform_between(rng, -3, 3);
          f.shift(heaps[j], d);
          for (HeapEntry& e : ref[j]) e.key += d;
          break;
        }
        default: {
          const auto i = static_cast<std::size_t>(uniform_below(rng, kHeaps));
          if (i == j) break;
          f.meld(heaps[i], heaps[j]);
          ref[i].insert(ref[i].end(), ref[j].begin(), ref[j].end());
          ref[j].clear();
          break;
        }
      }
      for (int h = 0; h < kHeaps; ++h) REQUIRE(heaps[static_cast<std::size_t>(h)].size == static_cast<std::int32_t>(ref[static_cast<std::size_t>(h)].size()));
    }
    CHECK(f.counters().extractions <= f.counters().insertions);
  }
}

TEST_CASE("operations touch O(log size) nodes") {
  std::mt19937_64 rng(23);
  constexpr std::int32_t kItems = 1 << 14;
  MeldHeapForest f(kItems);
  Heap a, b;
  auto bound = [](std::int32_t size) { return 2 * static_cast<std::int64_t>(std::log2(size + 1.0)) + 2; };
  for (std::int32_t i = 0; i < kItems; ++i) {
    Heap& h = i % 2 ? a : b;
    f.insert(h, i, uniform_between(rng, 0, 1000000));
    CHECK(f.last_touches() <= bound(h.size));
    if (i % 97 == 0) f.shift(h, -1);
  }
  const std::int32_t total = a.size + b.size;
  f.meld(a, b);
  CHECK(f.last_touches() <= bound(total));
  const auto shifts_before = f.counters().touches;
  f.shift(a, -10);
  CHECK(f.counters().touches == shifts_before);
  while (!a.empty()) {
    const std::int32_t size = a.size;
    f.extract_min(a);
    CHECK(f.last_touches() <= bound(size));
  }
}
