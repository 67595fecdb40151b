#include "mbranch/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string_view>

namespace mbranch {

namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Tokens of the next record; blank and comment lines are skipped.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
      tokens.clear();
      std::string_view rest(buffer_);
      for (;;) {
        const auto start = rest.find_first_not_of(" \t");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = std::min(rest.find_first_of(" \t"), rest.size());
        tokens.push_back(rest.substr(0, end));
        rest.remove_prefix(end);
      }
      if (tokens.empty() || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  std::int64_t line() const { return line_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

  template <class T>
  T number(std::string_view token, const char* what) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
  }

  std::int32_t id(std::string_view token, std::int32_t limit, const char* what) const {
    const auto v = number<std::int32_t>(token, what);
    if (v < 1 || v > limit) fail(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
    return v - 1;
  }

  void expect_size(const std::vector<std::string_view>& tokens, std::size_t size, const char* record) const {
    if (tokens.size() != size) {
      fail(std::string("'") + record + "' record needs " + std::to_string(size - 1) + " fields");
    }
  }

 private:
  std::istream& in_;
  std::string buffer_;
  std::int64_t line_ = 0;
};

// Reads and checks "p <kind> ..." with `fields` numbers after the kind.
std::vector<std::int64_t> read_problem(Reader& r, std::vector<std::string_view>& t, const char* kind,
                                       std::size_t fields) {
  if (!r.next(t)) r.fail("missing problem line");
  if (t[0] != "p" || t.size() < 2 || t[1] != kind) r.fail(std::string("expected 'p ") + kind + "' problem line");
  r.expect_size(t, fields + 2, "p");
  std::vector<std::int64_t> out;
  for (std::size_t i = 2; i < t.size(); ++i) {
    const auto v = r.number<std::int32_t>(t[i], "count");
    if (v < 0) r.fail("negative count");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Reader r(in);
  std::vector<std::string_view> t;
  const auto header = read_problem(r, t, "wmb", 3);
  const auto n = static_cast<std::int32_t>(header[0]);
  const auto m = static_cast<std::int32_t>(header[1]);
  const auto k = static_cast<std::int32_t>(header[2]);
  if (n < 1) r.fail("instance needs at least one node");
  if (k < 1) r.fail("instance needs at least one color");

  std::vector<ColorId> colors(static_cast<std::size_t>(n), kNone);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  while (r.next(t)) {
    if (t[0] == "v") {
      r.expect_size(t, 3, "v");
      const NodeId v = r.id(t[1], n, "node");
      auto& c = colors[static_cast<std::size_t>(v)];
      if (c != kNone) r.fail("node " + std::to_string(v + 1) + " colored twice");
      c = r.id(t[2], k, "color");
    } else if (t[0] == "a") {
      r.expect_size(t, 4, "a");
      if (static_cast<std::int32_t>(arcs.size()) == m) r.fail("more than " + std::to_string(m) + " arc lines");
      const NodeId tail = r.id(t[1], n, "node");
      const NodeId head = r.id(t[2], n, "node");
      if (tail == head) r.fail("self-loop at node " + std::to_string(tail + 1));
      arcs.push_back(Arc{tail, head, r.number<Weight>(t[3], "weight")});
    } else if (t[0] == "p") {
      r.fail("second problem line");
    } else {
      r.fail("unknown record '" + std::string(t[0]) + "'");
    }
  }
  if (static_cast<std::int32_t>(arcs.size()) != m) {
    r.fail("expected " + std::to_string(m) + " arc lines, found " + std::to_string(arcs.size()));
  }
  const auto missing = std::find(colors.begin(), colors.end(), kNone);
  if (missing != colors.end()) r.fail("node " + std::to_string(missing - colors.begin() + 1) + " has no color line");
  return make_instance(Digraph(n, std::move(arcs)), Coloring(std::move(colors), k));
}

void write_instance(std::ostream& out, const Instance& inst) {
  const Digraph& g = inst.graph;
  out << "p wmb " << g.num_nodes() << ' ' << g.num_arcs() << ' ' << inst.coloring.num_colors() << '\n';
  for (NodeId v = 0; v < g.num_nodes(); ++v) out << "v " << v + 1 << ' ' << inst.coloring.color_of(v) + 1 << '\n';
  for (const Arc& a : g.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
}

SolutionFile parse_solution(std::istream& in) {
  Reader r(in);
  std::vector<std::string_view> t;
  if (!r.next(t)) r.fail("missing solution line");
  if (t.size() != 5 || t[0] != "s" || t[1] != "card" || t[3] != "weight") {
    r.fail("expected 's card <c> weight <w>'");
  }
  SolutionFile s;
  s.cardinality = r.number<std::int64_t>(t[2], "cardinality");
  s.weight = r.number<Weight>(t[4], "weight");
  while (r.next(t)) {
    if (t[0] != "b") r.fail("unknown record '" + std::string(t[0]) + "'");
    r.expect_size(t, 3, "b");
    const auto tail = r.number<std::int32_t>(t[1], "node");
    const auto head = r.number<std::int32_t>(t[2], "node");
    if (tail < 1 || head < 1) r.fail("node ids start at 1");
    s.arcs.emplace_back(tail - 1, head - 1);
  }
  if (static_cast<std::int64_t>(s.arcs.size()) != s.cardinality) {
    r.fail("cardinality " + std::to_string(s.cardinality) + " but " + std::to_string(s.arcs.size()) + " arc lines");
  }
  return s;
}

void write_solution(std::ostream& out, const Digraph& g, std::span<const ArcId> branching) {
  std::vector<ArcId> sorted(branching.begin(), branching.end());
  std::sort(sorted.begin(), sorted.end());
  out << "s card " << sorted.size() << " weight " << total_weight(g, sorted) << '\n';
  for (ArcId a : sorted) out << "b " << g.arc(a).tail + 1 << ' ' << g.arc(a).head + 1 << '\n';
}

std::vector<ArcId> resolve_solution(const Digraph& g, const SolutionFile& s) {
  std::map<std::pair<NodeId, NodeId>, std::vector<ArcId>> by_pair;
  for (ArcId a = g.num_arcs(); a-- > 0;) by_pair[{g.arc(a).tail, g.arc(a).head}].push_back(a);
  std::vector<ArcId> out;
  for (const auto& p : s.arcs) {
    auto it = by_pair.find(p);
    if (it == by_pair.end() || it->second.empty()) {
      throw std::invalid_argument("no arc " + std::to_string(p.first + 1) + "->" + std::to_string(p.second + 1));
    }
    out.push_back(it->second.back());
    it->second.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteInstance parse_bipartite(std::istream& in) {
  Reader r(in);
  std::vector<std::string_view> t;
  const auto header = read_problem(r, t, "bip", 3);
  BipartiteInstance b;
  b.num_x = static_cast<std::int32_t>(header[0]);
  b.num_y = static_cast<std::int32_t>(header[1]);
  const auto e = static_cast<std::size_t>(header[2]);
  std::vector<std::int32_t> degree(static_cast<std::size_t>(b.num_y), 0);
  while (r.next(t)) {
    if (t[0] != "e") r.fail("unknown record '" + std::string(t[0]) + "'");
    r.expect_size(t, 4, "e");
    if (b.edges.size() == e) r.fail("more than " + std::to_string(e) + " edge lines");
    const std::int32_t y = r.id(t[1], b.num_y, "y node");
    const std::int32_t x = r.id(t[2], b.num_x, "x node");
    if (++degree[static_cast<std::size_t>(y)] > 2) r.fail("y node " + std::to_string(y + 1) + " has degree above 2");
    b.edges.push_back(BipartiteEdge{y, x, r.number<Weight>(t[3], "weight")});
  }
  if (b.edges.size() != e) {
    r.fail("expected " + std::to_string(e) + " edge lines, found " + std::to_string(b.edges.size()));
  }
  return b;
}

void write_bipartite(std::ostream& out, const BipartiteInstance& b) {
  out << "p bip " << b.num_x << ' ' << b.num_y << ' ' << b.edges.size() << '\n';
  for (const BipartiteEdge& e : b.edges) out << "e " << e.y + 1 << ' ' << e.x + 1 << ' ' << e.weight << '\n';
}

OrientationInstance parse_orientation(std::istream& in) {
  Reader r(in);
  std::vector<std::string_view> t;
  const auto header = read_problem(r, t, "ori", 2);
  OrientationInstance o;
  o.num_nodes = static_cast<std::int32_t>(header[0]);
  const auto e = static_cast<std::size_t>(header[1]);
  while (r.next(t)) {
    if (t[0] != "e") r.fail("unknown record '" + std::string(t[0]) + "'");
    r.expect_size(t, 5, "e");
    if (o.edges.size() == e) r.fail("more than " + std::to_string(e) + " edge lines");
    const NodeId u = r.id(t[1], o.num_nodes, "node");
    const NodeId v = r.id(t[2], o.num_nodes, "node");
    if (u == v) r.fail("self-loop at node " + std::to_string(u + 1));
    o.edges.push_back(OrientationEdge{u, v, r.number<Weight>(t[3], "weight"), r.number<Weight>(t[4], "weight")});
  }
  if (o.edges.size() != e) {
    r.fail("expected " + std::to_string(e) + " edge lines, found " + std::to_string(o.edges.size()));
  }
  return o;
}

void write_orientation(std::ostream& out, const OrientationInstance& o) {
  out << "p ori " << o.num_nodes << ' ' << o.edges.size() << '\n';
  for (const OrientationEdge& e : o.edges) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.forward << ' ' << e.backward << '\n';
  }
}

BackMap parse_backmap(std::istream& in) {
  Reader r(in);
  std::vector<std::string_view> t;
  std::vector<std::int32_t> edge;
  while (r.next(t)) {
    if (t[0] != "m") r.fail("unknown record '" + std::string(t[0]) + "'");
    r.expect_size(t, 3, "m");
    const auto a = r.number<std::int32_t>(t[1], "arc");
    const auto e = r.number<std::int32_t>(t[2], "edge");
    if (a < 1 || e < 1) r.fail("ids start at 1");
    if (static_cast<std::size_t>(a) > edge.size()) edge.resize(static_cast<std::size_t>(a), kNone);
    auto& slot = edge[static_cast<std::size_t>(a - 1)];
    if (slot != kNone) r.fail("arc " + std::to_string(a) + " mapped twice");
    slot = e - 1;
  }
  const auto gap = std::find(edge.begin(), edge.end(), kNone);
  if (gap != edge.end()) r.fail("arc " + std::to_string(gap - edge.begin() + 1) + " has no mapping");
  return BackMap{std::move(edge)};
}

void write_backmap(std::ostream& out, const BackMap& back) {
  for (std::size_t a = 0; a < back.source_edge.size(); ++a) out << "m " << a + 1 << ' ' << back.source_edge[a] + 1 << '\n';
}

void write_matching(std::ostream& out, const BipartiteInstance& b, std::span<const std::int32_t> edges) {
  Weight w = 0;
  for (std::int32_t e : edges) w += b.edges[static_cast<std::size_t>(e)].weight;
  out << "s card " << edges.size() << " weight " << w << '\n';
  for (std::int32_t e : edges) {
    const BipartiteEdge& edge = b.edges[static_cast<std::size_t>(e)];
    out << "e " << edge.y + 1 << ' ' << edge.x + 1 << '\n';
  }
}

void write_oriented(std::ostream& out, std::span<const OrientedEdge> edges) {
  Weight w = 0;
  for (const OrientedEdge& e : edges) w += e.weight;
  out << "s card " << edges.size() << " weight " << w << '\n';
  for (const OrientedEdge& e : edges) out << "o " << e.tail + 1 << ' ' << e.head + 1 << '\n';
}

}  // namespace mbranch
