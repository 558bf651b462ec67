#include <algorithm>
#include <queue>
#include <unordered_set>

#include "topotutte/ribbon_graph.hpp"

namespace topotutte {

RibbonGraph partial_dual(const RibbonGraph& g, EdgeSet a) {
  g.check_subset(a);
  const int halves = g.num_half_edges();
  const auto trace = trace_boundary(g, a);

  std::unordered_set<std::string> used;
  std::vector<std::optional<std::string>> kept(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& comp = trace[i];
    bool has_side = std::any_of(comp.begin(), comp.end(),
                                [](const BoundaryStep& s) { return s.kind == BoundaryStep::Kind::side; });
    if (has_side) continue;
    const auto& first = comp.front();
    int v = first.kind == BoundaryStep::Kind::free_circle ? first.index : g.vertex_of(first.index);
    kept[i] = g.vertex(v).name;
    used.insert(*kept[i]);
  }

  std::vector<int> new_before(halves, -1), new_after(halves, -1);
  std::vector<RibbonGraph::Vertex> vertices;
  int counter = 0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    RibbonGraph::Vertex vx;
    if (kept[i]) {
      vx.name = *kept[i];
    } else {
      do vx.name = "f" + std::to_string(counter++);
      while (used.count(vx.name));
      used.insert(vx.name);
    }
    for (const auto& step : trace[i]) {
      HalfEdge id;
      if (step.kind == BoundaryStep::Kind::segment) {
        id = step.index;
      } else if (step.kind == BoundaryStep::Kind::side) {
        id = 2 * step.index + step.side;
      } else {
        continue;
      }
      new_before[id] = step.from;
      new_after[id] = step.to;
      vx.rotation.push_back(id);
    }
    vertices.push_back(std::move(vx));
  }

  std::vector<RibbonGraph::Edge> edges = g.edges();
  for (int e = 0; e < g.num_edges(); ++e) {
    std::array<std::array<int, 2>, 2> long_sides;
    if (a.contains(e)) {
      long_sides = {{{point(2 * e, 0), point(2 * e, 1)}, {point(2 * e + 1, 0), point(2 * e + 1, 1)}}};
    } else {
      long_sides = {side_points(g, e, 0), side_points(g, e, 1)};
    }
    const int p = new_after[2 * e], q = new_after[2 * e + 1];
    bool twist = false;
    for (const auto& ls : long_sides)
      if ((ls[0] == p && ls[1] == q) || (ls[0] == q && ls[1] == p)) twist = true;
    edges[e].twist = twist;
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph geometric_dual(const RibbonGraph& g) {
  if (g.has_phantom_edges()) throw GraphError("geometric dual requires a cellular graph without phantom edges");
  return partial_dual(g, g.all_edges());
}

RibbonGraph delete_edge(const RibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw GraphError("unknown edge index");
  auto remap = [e](HalfEdge h) { return RibbonGraph::edge_of(h) < e ? h : h - 2; };
  std::vector<RibbonGraph::Vertex> vertices;
  for (const auto& v : g.vertices()) {
    RibbonGraph::Vertex nv{v.name, {}};
    for (HalfEdge h : v.rotation)
      if (RibbonGraph::edge_of(h) != e) nv.rotation.push_back(remap(h));
    vertices.push_back(std::move(nv));
  }
  auto edges = g.edges();
  edges.erase(edges.begin() + e);
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph contract_edge(const RibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw GraphError("unknown edge index");
  EdgeSet single;
  single.insert(e);
  return delete_edge(partial_dual(g, single), e);
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::bridge: return "bridge";
    case EdgeClass::ordinary: return "ordinary";
    case EdgeClass::trivial_orientable_loop: return "trivial_orientable_loop";
    case EdgeClass::nontrivial_orientable_loop: return "nontrivial_orientable_loop";
    case EdgeClass::nonorientable_loop: return "nonorientable_loop";
  }
  return "?";
}

EdgeClass classify_edge(const RibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw GraphError("unknown edge index");
  const int k = count_components(g, g.all_edges());
  if (!g.is_loop(e)) {
    EdgeSet rest = g.all_edges();
    rest.erase(e);
    return count_components(g, rest) > k ? EdgeClass::bridge : EdgeClass::ordinary;
  }
  if (g.twisted(e)) return EdgeClass::nonorientable_loop;

  // Cut the vertex disc along the chord joining the loop ends; the loop keeps
  // one end on each piece but is left out of the component count.
  const int v = g.vertex_of(2 * e);
  const auto& rot = g.vertex(v).rotation;
  int i = g.position(2 * e), j = g.position(2 * e + 1);
  if (i > j) std::swap(i, j);
  std::vector<RibbonGraph::Vertex> vertices = g.vertices();
  RibbonGraph::Vertex inside{vertices[v].name + "#", {}};
  vertices[v].rotation.clear();
  for (int p = 0; p < static_cast<int>(rot.size()); ++p) {
    (p > i && p <= j ? inside.rotation : vertices[v].rotation).push_back(rot[p]);
  }
  vertices.push_back(std::move(inside));
  RibbonGraph split(std::move(vertices), g.edges());
  EdgeSet rest = split.all_edges();
  rest.erase(e);
  return count_components(split, rest) > k ? EdgeClass::trivial_orientable_loop
                                            : EdgeClass::nontrivial_orientable_loop;
}

RibbonGraph flip_vertex(const RibbonGraph& g, int v) {
  auto vertices = g.vertices();
  auto edges = g.edges();
  std::reverse(vertices.at(v).rotation.begin(), vertices.at(v).rotation.end());
  for (int e = 0; e < g.num_edges(); ++e) {
    int ends = (g.vertex_of(2 * e) == v) + (g.vertex_of(2 * e + 1) == v);
    if (ends == 1) edges[e].twist = !edges[e].twist;
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph normalized_orientation(const RibbonGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> flip(n, -1);
  std::vector<char> orientable_component(n, 1);
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    incident[g.vertex_of(2 * e)].push_back(e);
    if (!g.is_loop(e)) incident[g.vertex_of(2 * e + 1)].push_back(e);
  }
  for (int s = 0; s < n; ++s) {
    if (flip[s] != -1) continue;
    flip[s] = 0;
    comp[s] = s;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int e : incident[u]) {
        int a = g.vertex_of(2 * e), b = g.vertex_of(2 * e + 1);
        int w = a == u ? b : a;
        int want = flip[u] ^ static_cast<int>(g.twisted(e));
        if (flip[w] == -1) {
          flip[w] = want;
          comp[w] = s;
          queue.push(w);
        } else if (flip[w] != want) {
          orientable_component[s] = 0;
        }
      }
    }
  }

  auto vertices = g.vertices();
  auto edges = g.edges();
  for (int v = 0; v < n; ++v)
    if (orientable_component[comp[v]] && flip[v]) std::reverse(vertices[v].rotation.begin(), vertices[v].rotation.end());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (orientable_component[comp[g.vertex_of(2 * e)]]) edges[e].twist = false;
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

ComponentSplit split_components(const RibbonGraph& g) {
  auto labels = component_labels(g, g.all_edges());
  const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  ComponentSplit out;
  out.edge_maps.resize(k);
  std::vector<int> new_index(g.num_edges(), -1);
  std::vector<int> new_vertex(g.num_vertices(), -1);
  std::vector<std::vector<RibbonGraph::Vertex>> vertices(k);
  std::vector<std::vector<RibbonGraph::Edge>> edges(k);
  for (int e = 0; e < g.num_edges(); ++e) {
    int c = labels[g.vertex_of(2 * e)];
    new_index[e] = static_cast<int>(edges[c].size());
    edges[c].push_back(g.edge(e));
    out.edge_maps[c].push_back(e);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    int c = labels[v];
    RibbonGraph::Vertex nv{g.vertex(v).name, {}};
    for (HalfEdge h : g.vertex(v).rotation) nv.rotation.push_back(2 * new_index[RibbonGraph::edge_of(h)] + h % 2);
    new_vertex[v] = static_cast<int>(vertices[c].size());
    vertices[c].push_back(std::move(nv));
  }
  std::vector<ArrowStructure> arrows(k);
  for (const auto& [arc, word] : g.arrows()) {
    Arc na = arc;
    int c;
    if (arc.kind == Arc::Kind::vertex_gap) {
      c = labels[arc.owner];
      na.owner = new_vertex[arc.owner];
    } else {
      c = labels[g.vertex_of(2 * arc.owner)];
      na.owner = new_index[arc.owner];
    }
    arrows[c][na] = word;
  }
  for (int c = 0; c < k; ++c) out.parts.emplace_back(std::move(vertices[c]), std::move(edges[c]), std::move(arrows[c]));
  return out;
}

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b, const std::string& suffix) {
  std::unordered_set<std::string> vnames, enames;
  auto vertices = a.vertices();
  auto edges = a.edges();
  for (const auto& v : vertices) vnames.insert(v.name);
  for (const auto& e : edges) enames.insert(e.name);
  const int shift = a.num_half_edges();
  const int vshift = a.num_vertices();
  for (const auto& v : b.vertices()) {
    RibbonGraph::Vertex nv{v.name, {}};
    while (vnames.count(nv.name)) nv.name += suffix;
    vnames.insert(nv.name);
    for (HalfEdge h : v.rotation) nv.rotation.push_back(h + shift);
    vertices.push_back(std::move(nv));
  }
  for (const auto& e : b.edges()) {
    auto ne = e;
    while (enames.count(ne.name)) ne.name += suffix;
    enames.insert(ne.name);
    edges.push_back(std::move(ne));
  }
  ArrowStructure arrows = a.arrows();
  for (const auto& [arc, word] : b.arrows()) {
    Arc na = arc;
    na.owner += arc.kind == Arc::Kind::vertex_gap ? vshift : a.num_edges();
    arrows[na] = word;
  }
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(arrows));
}

}  // namespace topotutte
