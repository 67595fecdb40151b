#ifndef MBRANCH_DSU_HPP_
#define MBRANCH_DSU_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbranch {

// Disjoint-set forest with union by rank and no path compression, so find
// walks at most log2(size) parent links.
class RankDsu {
 public:
  explicit RankDsu(std::int32_t size = 0)
      : parent_(static_cast<std::size_t>(size)), rank_(static_cast<std::size_t>(size), 0) {
    for (std::int32_t i = 0; i < size; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  std::int32_t size() const { return static_cast<std::int32_t>(parent_.size()); }
  std::int64_t union_count() const { return unions_; }

  std::int32_t find(std::int32_t x) const {
    check(x);
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  // Returns false when x and y were already in one set.
  bool unite(std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    auto& rx = rank_[static_cast<std::size_t>(x)];
    auto& ry = rank_[static_cast<std::size_t>(y)];
    if (rx < ry) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = x;
    if (rx == ry) ++rank_[static_cast<std::size_t>(x)];
    ++unions_;
    return true;
  }

  // Number of parent links from x to its root.
  std::int32_t depth(std::int32_t x) const {
    check(x);
    std::int32_t d = 0;
    while (parent_[static_cast<std::size_t>(x)] != x) {
      x = parent_[static_cast<std::size_t>(x)];
      ++d;
    }
    return d;
  }

 private:
  void check(std::int32_t x) const {
    if (static_cast<std::size_t>(x) >= parent_.size()) {
      throw std::out_of_range("dsu element " + std::to_string(x) + " out of range");
    }
  }

  std::vector<std::int32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::int64_t unions_ = 0;
};

// Array-labelled sets: find is a single lookup, unite relabels the smaller
// side. Member lists are kept so that a class can be enumerated.
class NaiveDsu {
 public:
  explicit NaiveDsu(std::int32_t size = 0)
      : label_(static_cast<std::size_t>(size)), members_(static_cast<std::size_t>(size)) {
    for (std::int32_t i = 0; i < size; ++i) {
      label_[static_cast<std::size_t>(i)] = i;
      members_[static_cast<std::size_t>(i)].push_back(i);
    }
  }

  std::int32_t size() const { return static_cast<std::int32_t>(label_.size()); }
  std::int64_t union_count() const { return unions_; }
  std::int64_t relabel_work() const { return relabels_; }

  std::int32_t find(std::int32_t x) const {
    if (static_cast<std::size_t>(x) >= label_.size()) {
      throw std::out_of_range("dsu element " + std::to_string(x) + " out of range");
    }
    return label_[static_cast<std::size_t>(x)];
  }

  bool unite(std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (members_[static_cast<std::size_t>(x)].size() < members_[static_cast<std::size_t>(y)].size()) {
      std::swap(x, y);
    }
    auto& into = members_[static_cast<std::size_t>(x)];
    auto& from = members_[static_cast<std::size_t>(y)];
    for (std::int32_t e : from) label_[static_cast<std::size_t>(e)] = x;
    relabels_ += static_cast<std::int64_t>(from.size());
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
    from.shrink_to_fit();
    ++unions_;
    return true;
  }

  // Members of the set rooted at root (root must be a current root).
  const std::vector<std::int32_t>& members(std::int32_t root) const {
    return members_[static_cast<std::size_t>(root)];
  }

 private:
  std::vector<std::int32_t> label_;
  std::vector<std::vector<std::int32_t>> members_;
  std::int64_t unions_ = 0;
  std::int64_t relabels_ = 0;
};

}  // namespace mbranch

#endif  // MBRANCH_DSU_HPP_
