#include "mbranch/graph.hpp"

#include <stdexcept>
#include <string>

namespace mbranch {

namespace {

std::vector<bool> node_mask(const Digraph& g, std::span<const NodeId> nodes) {
  std::vector<bool> mask(static_cast<std::size_t>(g.num_nodes()), false);
  for (NodeId v : nodes) {
    if (v < 0 || v >= g.num_nodes()) {
      throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    }
    mask[static_cast<std::size_t>(v)] = true;
  }
  return mask;
}

template <class Pred>
std::vector<ArcId> select_arcs(const Digraph& g, std::span<const NodeId> nodes, Pred pred) {
  const std::vector<bool> in_set = node_mask(g, nodes);
  std::vector<ArcId> out;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const Arc& arc = g.arc(a);
    if (pred(in_set[static_cast<std::size_t>(arc.tail)], in_set[static_cast<std::size_t>(arc.head)])) {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

Digraph::Digraph(std::int32_t num_nodes, std::vector<Arc> arcs)
    : num_nodes_(num_nodes), arcs_(std::move(arcs)) {
  if (num_nodes_ < 1) throw std::invalid_argument("graph needs at least one node");
  in_offset_.assign(static_cast<std::size_t>(num_nodes_) + 1, 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail < 0 || a.tail >= num_nodes_ || a.head < 0 || a.head >= num_nodes_) {
      throw std::invalid_argument("arc " + std::to_string(i + 1) + " has an endpoint out of range");
    }
    if (a.tail == a.head) {
      throw std::invalid_argument("arc " + std::to_string(i + 1) + " is a self-loop");
    }
    ++in_offset_[static_cast<std::size_t>(a.head) + 1];
  }
  for (std::size_t v = 0; v < static_cast<std::size_t>(num_nodes_); ++v) {
    in_offset_[v + 1] += in_offset_[v];
  }
  in_arcs_.resize(arcs_.size());
  std::vector<std::int32_t> fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    in_arcs_[static_cast<std::size_t>(fill[static_cast<std::size_t>(arcs_[i].head)]++)] =
        static_cast<ArcId>(i);
  }
}

std::span<const ArcId> Digraph::incoming(NodeId v) const {
  const auto begin = static_cast<std::size_t>(in_offset_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(in_offset_[static_cast<std::size_t>(v) + 1]);
  return std::span<const ArcId>(in_arcs_).subspan(begin, end - begin);
}

Digraph build_graph(std::int32_t num_nodes, std::vector<Arc> arcs) {
  return Digraph(num_nodes, std::move(arcs));
}

std::vector<ArcId> gamma(const Digraph& g, std::span<const NodeId> nodes) {
  return select_arcs(g, nodes, [](bool tail_in, bool head_in) { return tail_in && head_in; });
}

std::vector<ArcId> delta_in(const Digraph& g, std::span<const NodeId> nodes) {
  return select_arcs(g, nodes, [](bool tail_in, bool head_in) { return !tail_in && head_in; });
}

std::vector<ArcId> delta_out(const Digraph& g, std::span<const NodeId> nodes) {
  return select_arcs(g, nodes, [](bool tail_in, bool head_in) { return tail_in && !head_in; });
}

Weight total_weight(const Digraph& g, std::span<const ArcId> arcs) {
  Weight sum = 0;
  for (ArcId a : arcs) sum += g.arc(a).weight;
  return sum;
}

}  // namespace mbranch
