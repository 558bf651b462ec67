#include "topotutte/ribbon_graph.hpp"

namespace topotutte {

namespace {

// The other end point of the long side through corner point p, plus the side
// number and whether p is its 2e end.
struct SideHop {
  int other;
  int side;
  bool from_a_end;
};

SideHop hop_side(const RibbonGraph& g, int p) {
  const int e = RibbonGraph::edge_of(point_half_edge(p));
  for (int side = 0; side < 2; ++side) {
    auto pts = side_points(g, e, side);
    if (pts[0] == p) return {pts[1], side, true};
    if (pts[1] == p) return {pts[0], side, false};
  }
  throw GraphError("corrupt corner point");
}

}  // namespace

std::vector<BoundaryComponent> trace_boundary(const RibbonGraph& g, EdgeSet f) {
  g.check_subset(f);
  auto in_f = [&](HalfEdge h) { return f.contains(RibbonGraph::edge_of(h)); };

  std::vector<char> visited(2 * g.num_half_edges(), 0);
  std::vector<BoundaryComponent> out;

  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& rot = g.vertex(v).rotation;
    bool touches_f = false;
    for (HalfEdge h : rot) touches_f = touches_f || in_f(h);

    if (!touches_f) {
      BoundaryComponent comp;
      if (rot.empty()) comp.push_back({BoundaryStep::Kind::free_circle, v, 0, true, -1, -1});
      for (HalfEdge h : rot) {
        comp.push_back({BoundaryStep::Kind::segment, h, 0, true, point(h, 0), point(h, 1)});
        comp.push_back({BoundaryStep::Kind::gap, h, 0, true, -1, -1});
      }
      out.push_back(std::move(comp));
      continue;
    }

    for (HalfEdge start_h : rot) {
      if (!in_f(start_h)) continue;
      const int start = point(start_h, 1);
      if (visited[start]) continue;

      BoundaryComponent comp;
      int p = start;
      do {
        visited[p] = 1;
        // Vertex link.
        HalfEdge x = point_half_edge(p);
        int q;
        if (point_end(p) == 1) {
          comp.push_back({BoundaryStep::Kind::gap, x, 0, true, -1, -1});
          x = g.next(x);
          while (!in_f(x)) {
            comp.push_back({BoundaryStep::Kind::segment, x, 0, true, point(x, 0), point(x, 1)});
            comp.push_back({BoundaryStep::Kind::gap, x, 0, true, -1, -1});
            x = g.next(x);
          }
          q = point(x, 0);
        } else {
          x = g.prev(x);
          comp.push_back({BoundaryStep::Kind::gap, x, 0, false, -1, -1});
          while (!in_f(x)) {
            comp.push_back({BoundaryStep::Kind::segment, x, 0, false, point(x, 1), point(x, 0)});
            x = g.prev(x);
            comp.push_back({BoundaryStep::Kind::gap, x, 0, false, -1, -1});
          }
          q = point(x, 1);
        }
        visited[q] = 1;
        // Edge link.
        SideHop hop = hop_side(g, q);
        comp.push_back({BoundaryStep::Kind::side, RibbonGraph::edge_of(point_half_edge(q)), hop.side, hop.from_a_end, q,
                        hop.other});
        p = hop.other;
      } while (p != start);
      out.push_back(std::move(comp));
    }
  }
  return out;
}

int count_boundary_components(const RibbonGraph& g, EdgeSet f) {
  g.check_subset(f);
  const int halves = g.num_half_edges();
  std::vector<HalfEdge> next_f(halves, -1), prev_f(halves, -1);
  int cycles = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& rot = g.vertex(v).rotation;
    HalfEdge first = -1, last = -1;
    for (HalfEdge h : rot) {
      if (!f.contains(RibbonGraph::edge_of(h))) continue;
      if (first == -1) first = h;
      if (last != -1) {
        next_f[last] = h;
        prev_f[h] = last;
      }
      last = h;
    }
    if (first == -1) {
      ++cycles;  // the whole vertex circle
      continue;
    }
    next_f[last] = first;
    prev_f[first] = last;
  }

  std::vector<char> visited(2 * halves, 0);
  for (HalfEdge h = 0; h < halves; ++h) {
    if (next_f[h] == -1) continue;
    const int start = point(h, 1);
    if (visited[start]) continue;
    ++cycles;
    int p = start;
    do {
      visited[p] = 1;
      HalfEdge x = point_half_edge(p);
      int q = point_end(p) == 1 ? point(next_f[x], 0) : point(prev_f[x], 1);
      visited[q] = 1;
      p = hop_side(g, q).other;
    } while (p != start);
  }
  return cycles;
}

}  // namespace topotutte
