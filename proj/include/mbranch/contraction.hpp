#ifndef MBRANCH_CONTRACTION_HPP_
#define MBRANCH_CONTRACTION_HPP_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbranch/dsu.hpp"
#include "mbranch/graph.hpp"
#include "mbranch/rainbow.hpp"

namespace mbranch {

// A class entity names one color class over its lifetime. Entities
// [0, num_colors) are the input colors; entity num_colors + i is the class
// created by contraction record i. Merging makes the merged entities
// children of the new one, so the entities form a forest whose leaves are
// the input colors.
using EntityId = std::int32_t;

struct CycleArc {
  ArcId arc;
  NodeId head;          // current node the arc entered when the cycle was recorded
  EntityId head_class;  // class entity of `head` at that time
};

struct ContractionRecord {
  std::vector<CycleArc> cycle;  // cycle[0] is the arc whose insertion closed the cycle
  NodeId composite = kNone;
  ColorId merged_class = kNone;
};

struct ContractionLog {
  std::int32_t num_nodes = 0;
  std::int32_t num_colors = 0;
  std::vector<ContractionRecord> records;
  std::vector<EntityId> entity_parent;
  // Laminar family of contracted node sets; set i is the node set of record i.
  std::vector<std::int32_t> node_set;    // innermost set containing each node, or kNone
  std::vector<std::int32_t> set_parent;  // enclosing set, or kNone

  EntityId record_entity(std::int32_t record) const { return num_colors + record; }
};

// Cycle in B + {a}: arcs[j] enters nodes[j]; nodes[0] is the head of the
// inserted arc arcs[0], the rest follow parent arcs back up to it.
struct Cycle {
  std::vector<NodeId> nodes;
  std::vector<ArcId> arcs;
};

struct AddResult {
  bool extended = false;
  Cycle cycle;  // filled when !extended
};

struct ContractResult {
  std::int32_t record = kNone;
  NodeId composite = kNone;
  ColorId merged_class = kNone;
  std::vector<ColorId> absorbed_classes;  // class roots of the cycle nodes before merging
};

// Undoes the contractions in `log`, turning a matroid branching of the
// final contracted graph into one of the original graph. Colors are taken
// from `inst`. Throws std::logic_error on an inconsistent log.
//
// For each record, processed last to first: if an arc of the branching
// covers the merged class, the cycle arc entering the child class holding
// that arc's head color is dropped; otherwise the closing arc is dropped.
// Every other cycle arc is kept.
std::vector<ArcId> restore(const Instance& inst, const ContractionLog& log,
                           std::span<const ArcId> final_branching, std::ostream* trace = nullptr);

// Virtual contracted graph over a fixed instance: current nodes are roots
// of the node DSU, an arc is dead once both endpoints share a root.
// `inst` must outlive the state.
template <class Dsu>
class ContractionState {
 public:
  explicit ContractionState(const Instance& inst, std::ostream* trace = nullptr);

  const Instance& instance() const { return *inst_; }
  std::int32_t num_nodes() const { return inst_->graph.num_nodes(); }

  NodeId current_node(NodeId v) const { return nodes_.find(v); }
  // Class root of a current node.
  ColorId current_class(NodeId x) const { return coloring_.class_of(x); }
  EntityId class_entity(ColorId cls) const { return class_entity_[static_cast<std::size_t>(cls)]; }
  bool is_dead(ArcId a) const {
    const Arc& arc = inst_->graph.arc(a);
    return nodes_.find(arc.tail) == nodes_.find(arc.head);
  }
  // Branching arc entering current node x, or kNone.
  ArcId incoming(NodeId x) const { return in_arc_[static_cast<std::size_t>(x)]; }

  // Throws std::logic_error if a is dead or its head is already covered.
  AddResult try_add_arc(ArcId a);
  ContractResult contract(const Cycle& cycle);

  // Branching arcs of the current graph, ascending.
  std::vector<ArcId> current_branching() const;
  std::vector<ArcId> restore() const { return mbranch::restore(*inst_, log_, current_branching(), trace_); }

  const ContractionLog& log() const { return log_; }
  const MergeableColoring<Dsu>& coloring() const { return coloring_; }

  std::int64_t node_unions() const { return nodes_.union_count(); }
  std::int64_t tree_unions() const { return trees_.union_count(); }
  std::int64_t class_unions() const { return coloring_.classes().union_count(); }
  std::int64_t union_count() const { return node_unions() + tree_unions() + class_unions(); }

  // Recomputes the tree classes and coverage from scratch and compares.
  // Throws std::logic_error on mismatch. O(n + m) DSU operations.
  void check_invariants() const;

 private:
  const Instance* inst_;
  Dsu nodes_;
  Dsu trees_;
  MergeableColoring<Dsu> coloring_;
  std::vector<ArcId> in_arc_;
  std::vector<EntityId> class_entity_;
  std::vector<std::int32_t> top_;  // maximal structure at a root: node id, or num_nodes + set
  ContractionLog log_;
  std::ostream* trace_;
};

template <class Dsu>
ContractionState<Dsu>::ContractionState(const Instance& inst, std::ostream* trace)
    : inst_(&inst),
      nodes_(inst.graph.num_nodes()),
      trees_(inst.graph.num_nodes()),
      coloring_(inst.coloring),
      in_arc_(static_cast<std::size_t>(inst.graph.num_nodes()), kNone),
      class_entity_(static_cast<std::size_t>(inst.coloring.num_colors())),
      top_(static_cast<std::size_t>(inst.graph.num_nodes())),
      trace_(trace) {
  for (std::size_t c = 0; c < class_entity_.size(); ++c) class_entity_[c] = static_cast<EntityId>(c);
  for (std::size_t v = 0; v < top_.size(); ++v) top_[v] = static_cast<std::int32_t>(v);
  log_.num_nodes = inst.graph.num_nodes();
  log_.num_colors = inst.coloring.num_colors();
  log_.entity_parent.assign(class_entity_.size(), kNone);
  log_.node_set.assign(top_.size(), kNone);
}

template <class Dsu>
AddResult ContractionState<Dsu>::try_add_arc(ArcId a) {
  const Arc& arc = inst_->graph.arc(a);
  const NodeId u = nodes_.find(arc.tail);
  const NodeId v = nodes_.find(arc.head);
  if (u == v) throw std::logic_error("try_add_arc on a dead arc");
  if (in_arc_[static_cast<std::size_t>(v)] != kNone) throw std::logic_error("try_add_arc into a covered node");
  AddResult result;
  if (trees_.find(u) != trees_.find(v)) {
    in_arc_[static_cast<std::size_t>(v)] = a;
    trees_.unite(u, v);
    result.extended = true;
    if (trace_) *trace_ << "add a" << a + 1 << ' ' << arc.tail + 1 << "->" << arc.head + 1 << '\n';
    return result;
  }
  // v is uncovered, hence the root of the tree holding u.
  result.cycle.nodes.push_back(v);
  result.cycle.arcs.push_back(a);
  for (NodeId x = u; x != v;) {
    const ArcId b = in_arc_[static_cast<std::size_t>(x)];
    if (b == kNone) throw std::logic_error("cycle walk reached a root other than the head");
    result.cycle.nodes.push_back(x);
    result.cycle.arcs.push_back(b);
    x = nodes_.find(inst_->graph.arc(b).tail);
  }
  return result;
}

template <class Dsu>
ContractResult ContractionState<Dsu>::contract(const Cycle& cycle) {
  const std::vector<NodeId>& zs = cycle.nodes;
  if (zs.size() < 2 || zs.size() != cycle.arcs.size()) throw std::logic_error("malformed cycle");
  const auto record = static_cast<std::int32_t>(log_.records.size());
  const EntityId entity = log_.record_entity(record);
  const auto n = num_nodes();

  ContractResult result;
  result.record = record;
  ContractionRecord rec;
  rec.cycle.reserve(zs.size());
  for (std::size_t j = 0; j < zs.size(); ++j) {
    const ColorId cls = coloring_.class_of(zs[j]);
    result.absorbed_classes.push_back(cls);
    rec.cycle.push_back(CycleArc{cycle.arcs[j], zs[j], class_entity(cls)});
  }
  const ColorId merged = coloring_.merge_classes(zs);  // throws if dependent

  for (const CycleArc& ca : rec.cycle) log_.entity_parent[static_cast<std::size_t>(ca.head_class)] = entity;
  log_.entity_parent.push_back(kNone);
  log_.set_parent.push_back(kNone);
  for (NodeId x : zs) {
    const std::int32_t t = top_[static_cast<std::size_t>(x)];
    if (t < n) {
      log_.node_set[static_cast<std::size_t>(t)] = record;
    } else {
      log_.set_parent[static_cast<std::size_t>(t - n)] = record;
    }
  }

  for (std::size_t j = 1; j < zs.size(); ++j) {
    nodes_.unite(zs[0], zs[j]);
    trees_.unite(zs[0], zs[j]);
  }
  const NodeId z = nodes_.find(zs[0]);
  for (NodeId x : zs) in_arc_[static_cast<std::size_t>(x)] = kNone;
  coloring_.place_in_class(z, merged);
  class_entity_[static_cast<std::size_t>(merged)] = entity;
  top_[static_cast<std::size_t>(z)] = n + record;

  rec.composite = z;
  rec.merged_class = merged;
  log_.records.push_back(std::move(rec));
  result.composite = z;
  result.merged_class = merged;

  if (trace_) {
    *trace_ << "contract r" << record + 1 << " nodes";
    for (NodeId x : zs) *trace_ << ' ' << x + 1;
    *trace_ << " composite " << z + 1 << '\n';
  }
  return result;
}

template <class Dsu>
std::vector<ArcId> ContractionState<Dsu>::current_branching() const {
  std::vector<ArcId> out;
  for (NodeId x = 0; x < num_nodes(); ++x) {
    if (nodes_.find(x) == x && in_arc_[static_cast<std::size_t>(x)] != kNone) {
      out.push_back(in_arc_[static_cast<std::size_t>(x)]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Dsu>
void ContractionState<Dsu>::check_invariants() const {
  const auto n = num_nodes();
  RankDsu components(n);
  std::vector<ColorId> covered;
  for (NodeId x = 0; x < n; ++x) {
    if (nodes_.find(x) != x) continue;
    const ArcId b = in_arc_[static_cast<std::size_t>(x)];
    if (b == kNone) continue;
    if (is_dead(b)) throw std::logic_error("branching holds a dead arc");
    const Arc& arc = inst_->graph.arc(b);
    if (nodes_.find(arc.head) != x) throw std::logic_error("branching arc stored at the wrong node");
    if (!components.unite(nodes_.find(arc.tail), x)) throw std::logic_error("branching has a cycle");
    covered.push_back(coloring_.class_of(x));
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    throw std::logic_error("a class is covered twice");
  }
  // Same partition of current nodes: compare class representatives both ways.
  std::vector<std::int32_t> tree_rep(static_cast<std::size_t>(n), kNone);
  std::vector<std::int32_t> comp_rep(static_cast<std::size_t>(n), kNone);
  for (NodeId x = 0; x < n; ++x) {
    if (nodes_.find(x) != x) continue;
    const auto t = static_cast<std::size_t>(trees_.find(x));
    const auto c = static_cast<std::size_t>(components.find(x));
    if (tree_rep[t] == kNone) tree_rep[t] = static_cast<std::int32_t>(c);
    if (comp_rep[c] == kNone) comp_rep[c] = static_cast<std::int32_t>(t);
    if (tree_rep[t] != static_cast<std::int32_t>(c) || comp_rep[c] != static_cast<std::int32_t>(t)) {
      throw std::logic_error("tree classes differ from branching components");
    }
  }
}

}  // namespace mbranch

#endif  // MBRANCH_CONTRACTION_HPP_
