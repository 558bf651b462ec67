#include <algorithm>

#include "topotutte/ribbon_graph.hpp"

namespace topotutte {

namespace {

long long flag_word(const EdgeAttributes& a) {
  long long w = 0;
  if (a.zero) w |= 1;
  if (a.phantom) w |= 2;
  if (a.sign) w |= *a.sign == Sign::positive ? 4 : 8;
  return w;
}

// Encoding of the component containing `start`, read from half-edge `start`
// with the starting vertex traversed in direction `reversed`.
CanonicalCode encode_from(const RibbonGraph& g, HalfEdge start, bool reversed, bool labeled) {
  std::vector<int> order(g.num_vertices(), -1);
  std::vector<int> flip(g.num_vertices(), 0);
  std::vector<HalfEdge> first(g.num_vertices(), -1);
  std::vector<int> pos(g.num_half_edges(), -1);
  std::vector<int> queue;

  auto discover = [&](int v, HalfEdge h, int f) {
    order[v] = static_cast<int>(queue.size());
    flip[v] = f;
    first[v] = h;
    queue.push_back(v);
    HalfEdge x = h;
    for (int i = 0; i < g.degree(v); ++i) {
      pos[x] = i;
      x = f ? g.prev(x) : g.next(x);
    }
  };

  discover(g.vertex_of(start), start, reversed ? 1 : 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    HalfEdge x = first[v];
    for (int i = 0; i < g.degree(v); ++i) {
      HalfEdge y = RibbonGraph::partner(x);
      int w = g.vertex_of(y);
      if (order[w] == -1) discover(w, y, flip[v] ^ static_cast<int>(g.twisted(RibbonGraph::edge_of(x))));
      x = flip[v] ? g.prev(x) : g.next(x);
    }
  }

  CanonicalCode code;
  for (int v : queue) {
    code.push_back(g.degree(v));
    HalfEdge x = first[v];
    for (int i = 0; i < g.degree(v); ++i) {
      const int e = RibbonGraph::edge_of(x);
      HalfEdge y = RibbonGraph::partner(x);
      int w = g.vertex_of(y);
      code.push_back(order[w]);
      code.push_back(pos[y]);
      code.push_back(static_cast<int>(g.twisted(e)) ^ flip[v] ^ flip[w]);
      code.push_back(flag_word(g.attributes(e)));
      if (labeled) code.push_back(e);
      x = flip[v] ? g.prev(x) : g.next(x);
    }
  }
  return code;
}

}  // namespace

CanonicalCode canonical_form(const RibbonGraph& g, bool labeled) {
  if (g.num_edges() > kCanonicalFormMaxEdges)
    throw GraphError("canonical form is limited to " + std::to_string(kCanonicalFormMaxEdges) + " edges");

  auto labels = component_labels(g, g.all_edges());
  const int k = count_components(g, g.all_edges());
  std::vector<CanonicalCode> best(k);
  std::vector<char> have(k, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int c = labels[v];
    if (g.degree(v) == 0) {
      best[c] = {0};
      have[c] = 1;
      continue;
    }
    for (HalfEdge h : g.vertex(v).rotation)
      for (bool rev : {false, true}) {
        auto code = encode_from(g, h, rev, labeled);
        if (!have[c] || code < best[c]) {
          best[c] = std::move(code);
          have[c] = 1;
        }
      }
  }
  std::sort(best.begin(), best.end());
  CanonicalCode out;
  for (const auto& c : best) {
    out.push_back(static_cast<long long>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b, bool labeled) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (labeled)
    for (int e = 0; e < a.num_edges(); ++e)
      if (!(a.attributes(e) == b.attributes(e))) return false;
  return canonical_form(a, labeled) == canonical_form(b, labeled);
}

}  // namespace topotutte
