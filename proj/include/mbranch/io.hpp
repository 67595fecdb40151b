#ifndef MBRANCH_IO_HPP_
#define MBRANCH_IO_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbranch/rainbow.hpp"
#include "mbranch/reductions.hpp"

namespace mbranch {

// Line-oriented text formats, 1-based ids throughout. Blank lines and
// lines starting with "c" are skipped by every parser.
//
//   instance      p wmb <n> <m> <k>, n lines v <node> <color>, m lines a <tail> <head> <weight>
//   solution      s card <c> weight <w>, then b <tail> <head> per arc in ascending arc id
//   bipartite     p bip <|X|> <|Y|> <E>, then E lines e <y> <x> <weight>
//   orientation   p ori <n> <E>, then E lines e <u> <v> <weight u->v> <weight v->u>
//   back-map      m <gadget-arc> <edge> per gadget arc, arcs 1..M each exactly once
class ParseError : public std::runtime_error {
 public:
  ParseError(std::int64_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

Instance parse_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

struct SolutionFile {
  std::int64_t cardinality = 0;
  Weight weight = 0;
  std::vector<std::pair<NodeId, NodeId>> arcs;  // (tail, head), 0-based
};

SolutionFile parse_solution(std::istream& in);
void write_solution(std::ostream& out, const Digraph& g, std::span<const ArcId> branching);
// Maps each (tail, head) pair to the smallest arc id with those endpoints
// not already taken. Throws std::invalid_argument when none is left.
std::vector<ArcId> resolve_solution(const Digraph& g, const SolutionFile& s);

BipartiteInstance parse_bipartite(std::istream& in);
void write_bipartite(std::ostream& out, const BipartiteInstance& b);

OrientationInstance parse_orientation(std::istream& in);
void write_orientation(std::ostream& out, const OrientationInstance& o);

BackMap parse_backmap(std::istream& in);
void write_backmap(std::ostream& out, const BackMap& back);

// "s card <c> weight <w>" followed by "e <y> <x>" per matched edge.
void write_matching(std::ostream& out, const BipartiteInstance& b, std::span<const std::int32_t> edges);
// "s card <c> weight <w>" followed by "o <tail> <head>" per oriented edge.
void write_oriented(std::ostream& out, std::span<const OrientedEdge> edges);

}  // namespace mbranch

#endif  // MBRANCH_IO_HPP_
