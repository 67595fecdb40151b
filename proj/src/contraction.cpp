#include "mbranch/contraction.hpp"

namespace mbranch {

std::vector<ArcId> restore(const Instance& inst, const ContractionLog& log,
                           std::span<const ArcId> final_branching, std::ostream* trace) {
  const auto num_entities = log.entity_parent.size();
  if (num_entities != static_cast<std::size_t>(log.num_colors) + log.records.size()) {
    throw std::logic_error("entity forest does not match the record count");
  }
  // cover[e]: arc of the partially restored branching covering class e at
  // the level where e is current. via[e]: child entity on the path from e
  // down to the head color of cover[e].
  std::vector<ArcId> cover(num_entities, kNone);
  std::vector<EntityId> via(num_entities, kNone);

  auto head_color = [&](ArcId b) { return inst.coloring.color_of(inst.graph.arc(b).head); };
  auto claim = [&](ArcId b, EntityId top) {
    EntityId e = head_color(b);
    while (e != top) {
      const EntityId p = log.entity_parent[static_cast<std::size_t>(e)];
      if (p == kNone) throw std::logic_error("arc head color lies outside its class entity");
      via[static_cast<std::size_t>(p)] = e;
      e = p;
    }
    if (cover[static_cast<std::size_t>(top)] != kNone) throw std::logic_error("class covered twice");
    cover[static_cast<std::size_t>(top)] = b;
  };

  std::vector<ArcId> out(final_branching.begin(), final_branching.end());
  for (ArcId b : final_branching) {
    EntityId top = head_color(b);
    while (log.entity_parent[static_cast<std::size_t>(top)] != kNone) {
      top = log.entity_parent[static_cast<std::size_t>(top)];
    }
    claim(b, top);
  }

  for (std::size_t i = log.records.size(); i-- > 0;) {
    const ContractionRecord& rec = log.records[i];
    const EntityId entity = log.record_entity(static_cast<std::int32_t>(i));
    const ArcId cov = cover[static_cast<std::size_t>(entity)];
    const EntityId root_class = cov != kNone ? via[static_cast<std::size_t>(entity)] : rec.cycle.front().head_class;
    if (root_class == kNone) throw std::logic_error("covering arc has no child class");
    bool dropped = false;
    for (const CycleArc& ca : rec.cycle) {
      if (ca.head_class == root_class) {
        if (dropped) throw std::logic_error("two cycle arcs enter one class");
        dropped = true;
        cover[static_cast<std::size_t>(root_class)] = cov;
        if (trace) *trace << "restore r" << i + 1 << " drop a" << ca.arc + 1 << '\n';
      } else {
        out.push_back(ca.arc);
        claim(ca.arc, ca.head_class);
      }
    }
    if (!dropped) throw std::logic_error("no cycle arc enters the root class");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mbranch
