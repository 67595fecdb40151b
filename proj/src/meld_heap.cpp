#include "mbranch/meld_heap.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mbranch {

MeldHeapForest::MeldHeapForest(std::int32_t item_capacity) {
  const auto n = static_cast<std::size_t>(item_capacity);
  key_.assign(n, 0);
  pending_.assign(n, 0);
  left_.assign(n, kNone);
  right_.assign(n, kNone);
  dist_.assign(n, 1);
  present_.assign(n, 0);
}

void MeldHeapForest::push_down(std::int32_t x) {
  const auto ux = static_cast<std::size_t>(x);
  const Weight d = pending_[ux];
  if (d == 0) return;
  for (std::int32_t c : {left_[ux], right_[ux]}) {
    if (c == kNone) continue;
    key_[static_cast<std::size_t>(c)] += d;
    pending_[static_cast<std::size_t>(c)] += d;
  }
  pending_[ux] = 0;
}

// Both arguments are roots whose stored keys are current.
std::int32_t MeldHeapForest::merge(std::int32_t a, std::int32_t b) {
  if (a == kNone) return b;
  if (b == kNone) return a;
  ++last_touches_;
  if (less(b, a)) std::swap(a, b);
  push_down(a);
  const auto ua = static_cast<std::size_t>(a);
  right_[ua] = merge(right_[ua], b);
  if (dist(left_[ua]) < dist(right_[ua])) std::swap(left_[ua], right_[ua]);
  dist_[ua] = dist(right_[ua]) + 1;
  return a;
}

void MeldHeapForest::insert(Heap& h, std::int32_t item, Weight key) {
  if (item < 0 || item >= capacity()) {
    throw std::out_of_range("heap item " + std::to_string(item) + " out of range");
  }
  const auto u = static_cast<std::size_t>(item);
  if (present_[u]) throw std::invalid_argument("heap item " + std::to_string(item) + " already stored");
  present_[u] = 1;
  key_[u] = key;
  pending_[u] = 0;
  left_[u] = right_[u] = kNone;
  dist_[u] = 1;
  last_touches_ = 0;
  h.root = merge(h.root, item);
  ++h.size;
  ++counters_.insertions;
  counters_.touches += last_touches_;
}

std::optional<HeapEntry> MeldHeapForest::top(const Heap& h) const {
  if (h.empty()) return std::nullopt;
  return HeapEntry{key_[static_cast<std::size_t>(h.root)], h.root};
}

std::optional<HeapEntry> MeldHeapForest::extract_min(Heap& h) {
  if (h.empty()) return std::nullopt;
  const std::int32_t r = h.root;
  const auto ur = static_cast<std::size_t>(r);
  push_down(r);
  last_touches_ = 0;
  h.root = merge(left_[ur], right_[ur]);
  --h.size;
  present_[ur] = 0;
  left_[ur] = right_[ur] = kNone;
  ++counters_.extractions;
  counters_.touches += last_touches_;
  return HeapEntry{key_[ur], r};
}

void MeldHeapForest::shift(Heap& h, Weight delta) {
  ++counters_.shifts;
  if (h.empty()) return;
  const auto ur = static_cast<std::size_t>(h.root);
  key_[ur] += delta;
  pending_[ur] += delta;
}

void MeldHeapForest::meld(Heap& into, Heap& from) {
  if (&into == &from || (!into.empty() && into.root == from.root)) {
    throw std::invalid_argument("meld of a heap with itself");
  }
  last_touches_ = 0;
  into.root = merge(into.root, from.root);
  into.size += from.size;
  from = Heap{};
  ++counters_.melds;
  counters_.touches += last_touches_;
}

}  // namespace mbranch
