#include "topotutte/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace topotutte {

RibbonGraph::RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, ArrowStructure arrows)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw GraphError("a ribbon graph needs at least one vertex");
  if (edges_.size() > static_cast<std::size_t>(kMaxEdges))
    throw GraphError("at most " + std::to_string(kMaxEdges) + " edges are supported");

  const int halves = num_half_edges();
  vertex_of_.assign(halves, -1);
  position_.assign(halves, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    const auto& rot = vertices_[v].rotation;
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      HalfEdge h = rot[i];
      if (h < 0 || h >= halves) throw GraphError("vertex '" + vertices_[v].name + "' references a missing half-edge");
      if (vertex_of_[h] != -1) throw GraphError("half-edge used twice in rotations");
      vertex_of_[h] = v;
      position_[h] = i;
    }
  }
  for (int h = 0; h < halves; ++h)
    if (vertex_of_[h] == -1)
      throw GraphError("half-edge of edge '" + edges_[edge_of(h)].name + "' is not attached to any vertex");

  std::unordered_set<std::string> names;
  for (const auto& v : vertices_)
    if (!names.insert(v.name).second) throw GraphError("duplicate vertex name '" + v.name + "'");
  names.clear();
  for (const auto& e : edges_)
    if (!names.insert(e.name).second) throw GraphError("duplicate edge name '" + e.name + "'");

  for (auto& e : edges_)
    for (int s = 0; s < 2; ++s)
      if (e.half_names[s].empty()) e.half_names[s] = e.name + "." + std::to_string(s + 1);

  for (const auto& [arc, word] : arrows_) {
    bool ok = arc.kind == Arc::Kind::vertex_gap
                  ? arc.owner >= 0 && arc.owner < num_vertices() && arc.slot >= 0 &&
                        arc.slot < std::max(1, degree(arc.owner))
                  : arc.owner >= 0 && arc.owner < num_edges() && (arc.slot == 0 || arc.slot == 1);
    if (!ok) throw GraphError("arrow placed on a missing arc");
    for (int d : word)
      if (d != 1 && d != -1) throw GraphError("arrow directions must be +1 or -1");
  }
}

RibbonGraph RibbonGraph::from_words(const std::vector<std::vector<std::string>>& rotations,
                                    const std::set<std::string>& twisted,
                                    const std::vector<std::string>& edge_order) {
  std::vector<std::string> order = edge_order;
  std::unordered_map<std::string, int> count;
  for (const auto& rot : rotations)
    for (const auto& name : rot) {
      if (count[name]++ == 0 && edge_order.empty()) order.push_back(name);
    }
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) index[order[i]] = i;
  for (const auto& [name, c] : count) {
    if (c != 2) throw GraphError("edge '" + name + "' must occur exactly twice in the rotations");
    if (!index.count(name)) throw GraphError("edge '" + name + "' missing from the edge order");
  }
  if (order.size() != count.size()) throw GraphError("edge order lists unused edges");

  std::vector<Edge> edges(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    edges[i].name = order[i];
    edges[i].twist = twisted.count(order[i]) > 0;
  }
  std::vector<int> seen(order.size(), 0);
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    Vertex vx{"v" + std::to_string(v), {}};
    for (const auto& name : rotations[v]) {
      int e = index.at(name);
      vx.rotation.push_back(2 * e + seen[e]++);
    }
    vertices.push_back(std::move(vx));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

HalfEdge RibbonGraph::next(HalfEdge h) const {
  const auto& rot = vertices_[vertex_of_[h]].rotation;
  return rot[(position_[h] + 1) % rot.size()];
}

HalfEdge RibbonGraph::prev(HalfEdge h) const {
  const auto& rot = vertices_[vertex_of_[h]].rotation;
  return rot[(position_[h] + rot.size() - 1) % rot.size()];
}

EdgeSet RibbonGraph::live_edges() const {
  EdgeSet out;
  for (int e = 0; e < num_edges(); ++e)
    if (!edges_[e].attrs.phantom) out.insert(e);
  return out;
}

int RibbonGraph::find_edge(std::string_view name) const {
  for (int e = 0; e < num_edges(); ++e)
    if (edges_[e].name == name) return e;
  throw GraphError("unknown edge '" + std::string(name) + "'");
}

int RibbonGraph::find_vertex(std::string_view name) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].name == name) return v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

EdgeSet RibbonGraph::edge_set(const std::vector<std::string>& names) const {
  EdgeSet out;
  for (const auto& n : names) out.insert(find_edge(n));
  return out;
}

void RibbonGraph::check_subset(EdgeSet f) const {
  if (!f.subset_of(all_edges())) throw GraphError("edge subset references an unknown edge");
}

RibbonGraph RibbonGraph::with_arrows(ArrowStructure arrows) const {
  return RibbonGraph(vertices_, edges_, std::move(arrows));
}

RibbonGraph RibbonGraph::with_attributes(int e, EdgeAttributes attrs) const {
  auto edges = edges_;
  edges.at(e).attrs = std::move(attrs);
  return RibbonGraph(vertices_, std::move(edges), arrows_);
}

std::array<int, 2> side_points(const RibbonGraph& g, int e, int side) {
  const HalfEdge a = 2 * e, b = 2 * e + 1;
  const bool t = g.twisted(e);
  if (side == 0) return {point(a, 1), point(b, t ? 1 : 0)};
  return {point(a, 0), point(b, t ? 0 : 1)};
}

std::ostream& operator<<(std::ostream& os, const SubgraphMetrics& m) {
  return os << "(v=" << m.v << ", e=" << m.e << ", k=" << m.k << ", r=" << m.r << ", n=" << m.n << ", bc=" << m.bc
            << ", s=" << m.s << ", " << (m.orientable ? "orientable" : "non-orientable") << ")";
}

// ---------------------------------------------------------------------------

namespace {

// Union-find with parity, used for components and orientability.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<int, int> find(int x) {
    int p = 0;
    int root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression with parity bookkeeping.
    int acc = p;
    while (parent_[x] != root) {
      int next = parent_[x];
      int px = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {root, p};
  }

  // Returns false when the parity constraint contradicts earlier ones.
  bool unite(int a, int b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ parity;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace

std::vector<int> component_labels(const RibbonGraph& g, EdgeSet f) {
  g.check_subset(f);
  ParityUnionFind uf(g.num_vertices());
  for (int e : f.indices()) uf.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1), 0);
  std::vector<int> label(g.num_vertices(), -1), root_label(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = uf.find(v).first;
    if (root_label[r] == -1) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int count_components(const RibbonGraph& g, EdgeSet f) {
  auto labels = component_labels(g, f);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

SubgraphMetrics metrics(const RibbonGraph& g, EdgeSet f) {
  g.check_subset(f);
  SubgraphMetrics m;
  m.v = g.num_vertices();
  m.e = f.size();
  ParityUnionFind uf(g.num_vertices());
  int merges = 0;
  for (int e : f.indices()) {
    int a = g.vertex_of(2 * e), b = g.vertex_of(2 * e + 1);
    bool joined = uf.find(a).first != uf.find(b).first;
    if (!uf.unite(a, b, g.twisted(e) ? 1 : 0)) m.orientable = false;
    if (joined) ++merges;
  }
  m.k = m.v - merges;
  m.r = m.v - m.k;
  m.n = m.e - m.r;
  m.bc = count_boundary_components(g, f);
  m.s = m.k + m.n - m.bc;
  return m;
}

}  // namespace topotutte
