#ifndef MBRANCH_MELD_HEAP_HPP_
#define MBRANCH_MELD_HEAP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mbranch/graph.hpp"

namespace mbranch {

struct HeapEntry {
  Weight key;
  std::int32_t item;

  friend bool operator==(const HeapEntry&, const HeapEntry&) = default;
};

struct HeapCounters {
  std::int64_t insertions = 0;
  std::int64_t extractions = 0;
  std::int64_t melds = 0;
  std::int64_t shifts = 0;
  std::int64_t touches = 0;  // heap nodes visited by merge walks
};

// A family of mergeable min-heaps over items 0..capacity-1, backed by
// leftist trees. Every item sits in at most one heap at a time and its
// heap node is addressed by the item id itself. Each node carries a
// pending key offset for its children, so shifting a whole heap is O(1);
// insert, extract-min and meld walk right spines only and cost O(log size).
// Ties on key are broken by smaller item id.
class MeldHeapForest {
 public:
  // A heap is just a root handle plus a size; copying one does not clone
  // the heap, so pass it by reference.
  struct Heap {
    std::int32_t root = kNone;
    std::int32_t size = 0;
    bool empty() const { return root == kNone; }
  };

  explicit MeldHeapForest(std::int32_t item_capacity = 0);

  std::int32_t capacity() const { return static_cast<std::int32_t>(key_.size()); }
  bool contains(std::int32_t item) const { return present_[static_cast<std::size_t>(item)] != 0; }

  // Throws std::invalid_argument if the item is already stored in some heap.
  void insert(Heap& h, std::int32_t item, Weight key);

  std::optional<HeapEntry> top(const Heap& h) const;
  std::optional<HeapEntry> extract_min(Heap& h);

  // Adds delta to the key of every item in h.
  void shift(Heap& h, Weight delta);

  // Moves every item of `from` into `into`; `from` is left empty.
  // Throws std::invalid_argument when both handles name the same heap.
  void meld(Heap& into, Heap& from);

  const HeapCounters& counters() const { return counters_; }
  // Nodes visited by the most recent insert / extract / meld.
  std::int64_t last_touches() const { return last_touches_; }

 private:
  bool less(std::int32_t a, std::int32_t b) const {
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    return key_[ua] < key_[ub] || (key_[ua] == key_[ub] && a < b);
  }
  std::int32_t dist(std::int32_t x) const { return x == kNone ? 0 : dist_[static_cast<std::size_t>(x)]; }
  void push_down(std::int32_t x);
  std::int32_t merge(std::int32_t a, std::int32_t b);

  std::vector<Weight> key_;
  std::vector<Weight> pending_;
  std::vector<std::int32_t> left_;
  std::vector<std::int32_t> right_;
  std::vector<std::int32_t> dist_;
  std::vector<std::uint8_t> present_;
  HeapCounters counters_;
  std::int64_t last_touches_ = 0;
};

}  // namespace mbranch

#endif  // MBRANCH_MELD_HEAP_HPP_
