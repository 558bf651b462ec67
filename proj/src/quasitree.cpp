#include "topotutte/quasitree.hpp"

#include <algorithm>
#include <numeric>

namespace topotutte {

std::vector<int> edge_ranks(const EdgeOrder& order, int num_edges) {
  std::vector<int> rank(num_edges, -1);
  if (order.empty()) {
    std::iota(rank.begin(), rank.end(), 0);
    return rank;
  }
  if (static_cast<int>(order.size()) != num_edges) throw GraphError("edge order must list every edge once");
  for (int i = 0; i < num_edges; ++i) {
    const int e = order[i];
    if (e < 0 || e >= num_edges || rank[e] != -1) throw GraphError("edge order must list every edge once");
    rank[e] = i;
  }
  return rank;
}

std::vector<EdgeSet> quasi_trees(const RibbonGraph& g, const EnumerationOptions& opts) {
  if (g.has_phantom_edges()) throw GraphError("quasi-trees need a graph without phantom edges");
  check_enumeration_cap(g.num_edges(), opts);
  std::vector<EdgeSet> out;
  const std::uint64_t count = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t bits = 0; bits < count; ++bits)
    if (count_boundary_components(g, EdgeSet(bits)) == 1) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

bool ChordDiagram::crossing(int e, int f) const {
  if (e == f) return false;
  auto [a0, a1] = chords[e].positions;
  auto [b0, b1] = chords[f].positions;
  const bool b0_inside = a0 < b0 && b0 < a1;
  const bool b1_inside = a0 < b1 && b1 < a1;
  return b0_inside != b1_inside;
}

namespace {

void set_live_flags(ChordDiagram& d, const EdgeOrder& order) {
  const int m = static_cast<int>(d.chords.size());
  const auto rank = edge_ranks(order, m);
  for (int e = 0; e < m; ++e) {
    bool live = true;
    for (int f = 0; f < m && live; ++f)
      if (d.crossing(e, f) && rank[f] < rank[e]) live = false;
    d.chords[e].live = live;
  }
}

// Successor of corner point p around the boundary of its edge ribbon,
// oriented before(a) -> after(a) -> ... .
int ribbon_successor(const RibbonGraph& g, int p) {
  const HalfEdge h = point_half_edge(p);
  const int e = RibbonGraph::edge_of(h);
  const int ba = point(2 * e, 0), aa = point(2 * e, 1), bb = point(2 * e + 1, 0), ab = point(2 * e + 1, 1);
  const std::array<int, 4> cycle = g.twisted(e) ? std::array<int, 4>{ba, aa, ab, bb} : std::array<int, 4>{ba, aa, bb, ab};
  for (int i = 0; i < 4; ++i)
    if (cycle[i] == p) return cycle[(i + 1) % 4];
  throw GraphError("corrupt corner point");
}

ChordDiagram diagram_from_marks(int num_edges, const std::vector<int>& marks) {
  ChordDiagram d;
  d.marks = marks;
  d.chords.resize(num_edges);
  std::vector<int> seen(num_edges, 0);
  for (int i = 0; i < static_cast<int>(marks.size()); ++i) d.chords[marks[i]].positions[seen[marks[i]]++] = i;
  return d;
}

}  // namespace

ChordDiagram chord_diagram(const RibbonGraph& g, EdgeSet q, const EdgeOrder& order) {
  const auto trace = trace_boundary(g, q);
  if (trace.size() != 1) throw GraphError("not a spanning quasi-tree");

  std::vector<int> marks;
  std::vector<std::vector<bool>> along(g.num_edges());
  for (const auto& step : trace.front()) {
    int e;
    if (step.kind == BoundaryStep::Kind::segment)
      e = RibbonGraph::edge_of(step.index);
    else if (step.kind == BoundaryStep::Kind::side)
      e = step.index;
    else
      continue;
    marks.push_back(e);
    along[e].push_back(ribbon_successor(g, step.from) == step.to);
  }

  ChordDiagram d = diagram_from_marks(g.num_edges(), marks);
  for (int e = 0; e < g.num_edges(); ++e) {
    d.chords[e].internal = q.contains(e);
    d.chords[e].orientable = along[e][0] == along[e][1];
  }
  set_live_flags(d, order);
  return d;
}

ChordDiagram chord_diagram_via_partial_dual(const RibbonGraph& g, EdgeSet q, const EdgeOrder& order) {
  const RibbonGraph pd = partial_dual(g, q);
  if (pd.num_vertices() != 1) throw GraphError("not a spanning quasi-tree");
  std::vector<int> marks;
  for (HalfEdge h : pd.vertex(0).rotation) marks.push_back(RibbonGraph::edge_of(h));
  ChordDiagram d = diagram_from_marks(g.num_edges(), marks);
  for (int e = 0; e < g.num_edges(); ++e) {
    d.chords[e].internal = q.contains(e);
    d.chords[e].orientable = !pd.twisted(e);
  }
  set_live_flags(d, order);
  return d;
}

DualQuasiTree dual_quasitree(const RibbonGraph& g, EdgeSet q) {
  if (count_boundary_components(g, q) != 1) throw GraphError("not a spanning quasi-tree");
  return {geometric_dual(g), g.all_edges().minus(q)};
}

namespace {

AbstractGraph contracted_graph(const RibbonGraph& g, EdgeSet kept, EdgeSet edges) {
  const auto labels = component_labels(g, kept);
  const int k = count_components(g, kept);
  std::vector<std::pair<int, int>> out;
  for (int e : edges.indices()) out.emplace_back(labels[g.vertex_of(2 * e)], labels[g.vertex_of(2 * e + 1)]);
  return AbstractGraph(k, std::move(out));
}

Poly shifted_tutte(const AbstractGraph& gamma, const char* first, const char* second) {
  const Var x("x"), y("y");
  const Poly t = tutte(gamma, x, y);
  return substitute(t, {{x, Poly::variable(first) + 1}, {y, Poly::variable(second) + 1}});
}

}  // namespace

ButlerTerm butler_term(const RibbonGraph& g, EdgeSet q, const EdgeOrder& order) {
  ButlerTerm term;
  term.q = q;
  term.diagram = chord_diagram(g, q, order);

  EdgeSet internal_live, external_live;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& c = term.diagram.chords[e];
    if (!c.live || !c.orientable) continue;
    (c.internal ? internal_live : external_live).insert(e);
  }

  const RibbonGraph dual = geometric_dual(g);
  const EdgeSet q_star = g.all_edges().minus(q);
  term.f_q = q.minus(internal_live);
  term.gamma_q = contracted_graph(g, term.f_q, internal_live);
  term.f_q_star = q_star.minus(external_live);
  term.gamma_q_star = contracted_graph(dual, term.f_q_star, external_live);

  const Var a("A"), b("B");
  term.contribution = Poly::variable(a, metrics(g, term.f_q).s) * shifted_tutte(term.gamma_q, "X", "A") *
                      Poly::variable(b, metrics(dual, term.f_q_star).s) * shifted_tutte(term.gamma_q_star, "Y", "B");
  return term;
}

std::vector<ButlerTerm> butler_terms(const RibbonGraph& g, const EdgeOrder& order, const EnumerationOptions& opts) {
  std::vector<ButlerTerm> out;
  for (EdgeSet q : quasi_trees(g, opts)) out.push_back(butler_term(g, q, order));
  return out;
}

Poly krushkal_via_quasitrees(const RibbonGraph& g, const EdgeOrder& order, const EnumerationOptions& opts) {
  const auto rank = edge_ranks(order, g.num_edges());
  const auto split = split_components(g);
  Poly total(1);
  for (std::size_t c = 0; c < split.parts.size(); ++c) {
    const auto& map = split.edge_maps[c];
    EdgeOrder local(map.size());
    std::iota(local.begin(), local.end(), 0);
    std::sort(local.begin(), local.end(), [&](int i, int j) { return rank[map[i]] < rank[map[j]]; });
    Poly part;
    for (const auto& t : butler_terms(split.parts[c], local, opts)) part += t.contribution;
    total *= part;
  }
  return total;
}

}  // namespace topotutte
