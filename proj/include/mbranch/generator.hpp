#ifndef MBRANCH_GENERATOR_HPP_
#define MBRANCH_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mbranch/rainbow.hpp"

namespace mbranch {

// Draws below are defined on top of the raw mt19937_64 stream only, so
// output is identical across standard libraries.

// Uniform in [0, bound). bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
// Uniform in [lo, hi].
std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

template <class T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(uniform_below(rng, i))]);
  }
}

struct GenParams {
  std::int32_t nodes = 1;
  std::int32_t arcs = 0;
  std::int32_t colors = 1;
  std::uint64_t seed = 0;
  Weight wmin = 0;
  Weight wmax = 0;
};

// Random instance: every color class nonempty, arcs drawn uniformly among
// ordered pairs of distinct nodes (parallel arcs allowed), weights uniform
// in [wmin, wmax]. Throws std::invalid_argument unless
// 1 <= colors <= nodes, arcs >= 0, wmin <= wmax, and nodes >= 2 when arcs > 0.
Instance generate_instance(const GenParams& p);

}  // namespace mbranch

#endif  // MBRANCH_GENERATOR_HPP_
