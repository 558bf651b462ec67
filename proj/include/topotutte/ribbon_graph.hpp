#pragma once

// Ribbon graphs stored as combinatorial maps: each vertex carries a cyclic
// rotation of half-edges, each edge joins two half-edges and may be twisted.
//
// Half-edge h belongs to edge h / 2; its partner is h ^ 1. The attachment
// segment of a half-edge has two end points: "before" (towards the previous
// half-edge in the rotation) and "after". The boundary of a spanning
// subgraph is traced over these points. An untwisted ribbon joins
// after(a) to before(b) and before(a) to after(b); a twisted one joins
// after(a) to after(b) and before(a) to before(b).

#include "topotutte/polynomial.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace topotutte {

// Thrown for structurally invalid ribbon graphs and bad edge references.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using HalfEdge = int;

inline constexpr int kMaxEdges = 64;

// Subset of edge indices of one graph.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet all(int num_edges) {
    return EdgeSet(num_edges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_edges) - 1);
  }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator^(EdgeSet o) const { return EdgeSet(bits_ ^ o.bits_); }
  constexpr EdgeSet minus(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(EdgeSet, EdgeSet) = default;
  friend constexpr auto operator<=>(EdgeSet, EdgeSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class Sign { positive, negative };

struct EdgeAttributes {
  Poly weight_x{1};
  Poly weight_y{1};
  std::optional<Sign> sign;
  bool zero = false;     // 0-edge of a relative graph
  bool phantom = false;  // surface-only edge of an embedded pair

  friend bool operator==(const EdgeAttributes&, const EdgeAttributes&) = default;
};

// A boundary arc carrying arrows: either gap `slot` of a vertex (the arc
// following rotation position `slot`; gap 0 is the whole circle of a vertex
// without half-edges) or long side `slot` of an edge. Side 0 is the side
// through after(2e), side 1 the side through before(2e).
struct Arc {
  enum class Kind : std::uint8_t { vertex_gap, edge_side };
  Kind kind = Kind::vertex_gap;
  int owner = 0;
  int slot = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Arrow directions in order along an arc: +1 points along the rotation
// (vertex gaps) or from the 2e end to the 2e+1 end (edge sides).
using ArrowWord = std::vector<int>;
using ArrowStructure = std::map<Arc, ArrowWord>;

class RibbonGraph {
 public:
  struct Vertex {
    std::string name;
    std::vector<HalfEdge> rotation;
  };
  struct Edge {
    std::string name;
    bool twist = false;
    EdgeAttributes attrs;
    std::array<std::string, 2> half_names;
  };

  // Validates: at least one vertex, every half-edge 0..2m-1 occurs exactly
  // once across the rotations, unique names, arrows on existing arcs.
  RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, ArrowStructure arrows = {});

  // Builds a graph from rotations written as edge names; each edge name must
  // occur exactly twice overall. Vertices are named v0, v1, ...; edges are
  // indexed by `edge_order` when given, otherwise by first occurrence.
  static RibbonGraph from_words(const std::vector<std::vector<std::string>>& rotations,
                                const std::set<std::string>& twisted = {},
                                const std::vector<std::string>& edge_order = {});

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const ArrowStructure& arrows() const { return arrows_; }

  static constexpr int edge_of(HalfEdge h) { return h / 2; }
  static constexpr HalfEdge partner(HalfEdge h) { return h ^ 1; }

  int vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  int position(HalfEdge h) const { return position_[h]; }
  int degree(int v) const { return static_cast<int>(vertices_[v].rotation.size()); }
  HalfEdge next(HalfEdge h) const;
  HalfEdge prev(HalfEdge h) const;
  bool twisted(int e) const { return edges_[e].twist; }
  bool is_loop(int e) const { return vertex_of_[2 * e] == vertex_of_[2 * e + 1]; }
  const EdgeAttributes& attributes(int e) const { return edges_[e].attrs; }

  EdgeSet all_edges() const { return EdgeSet::all(num_edges()); }
  EdgeSet live_edges() const;  // non-phantom edges
  bool has_phantom_edges() const { return live_edges() != all_edges(); }

  // Throws GraphError for unknown names.
  int find_edge(std::string_view name) const;
  int find_vertex(std::string_view name) const;
  EdgeSet edge_set(const std::vector<std::string>& names) const;
  void check_subset(EdgeSet f) const;

  RibbonGraph with_arrows(ArrowStructure arrows) const;
  RibbonGraph with_attributes(int e, EdgeAttributes attrs) const;
  RibbonGraph without_arrows() const { return with_arrows({}); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  ArrowStructure arrows_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
};

// Corner points of attachment segments: point(h, 0) = before(h),
// point(h, 1) = after(h).
constexpr int point(HalfEdge h, int end) { return 2 * h + end; }
constexpr HalfEdge point_half_edge(int p) { return p / 2; }
constexpr int point_end(int p) { return p % 2; }

// The two end points of long side `side` of edge e, ordered from the 2e end.
std::array<int, 2> side_points(const RibbonGraph& g, int e, int side);

struct SubgraphMetrics {
  int v = 0;
  int e = 0;
  int k = 0;
  int r = 0;
  int n = 0;
  int bc = 0;
  int s = 0;
  bool orientable = true;

  friend bool operator==(const SubgraphMetrics&, const SubgraphMetrics&) = default;
};

std::ostream& operator<<(std::ostream& os, const SubgraphMetrics& m);

// One step of a boundary walk.
struct BoundaryStep {
  enum class Kind : std::uint8_t {
    gap,          // vertex gap following half-edge `index`
    segment,      // attachment segment of half-edge `index` (edge not in the subgraph)
    side,         // long side `side` of edge `index` (edge in the subgraph)
    free_circle,  // whole boundary of vertex `index`, which has no half-edges
  };
  Kind kind = Kind::gap;
  int index = 0;
  int side = 0;
  bool forward = true;
  int from = -1;  // corner points for segment and side steps
  int to = -1;

  friend bool operator==(const BoundaryStep&, const BoundaryStep&) = default;
};

using BoundaryComponent = std::vector<BoundaryStep>;

// Traces every boundary component of the spanning subgraph (V, F).
std::vector<BoundaryComponent> trace_boundary(const RibbonGraph& g, EdgeSet f);
int count_boundary_components(const RibbonGraph& g, EdgeSet f);

// Component label per vertex of the spanning subgraph (V, F), labels 0..k-1
// in order of first vertex.
std::vector<int> component_labels(const RibbonGraph& g, EdgeSet f);
int count_components(const RibbonGraph& g, EdgeSet f);

SubgraphMetrics metrics(const RibbonGraph& g, EdgeSet f);
inline SubgraphMetrics metrics(const RibbonGraph& g) { return metrics(g, g.all_edges()); }

// Partial dual G^A. Edge indices, names and attributes are preserved; arrows
// are dropped. Vertices untouched by A keep their names.
RibbonGraph partial_dual(const RibbonGraph& g, EdgeSet a);
// Geometric dual G* = G^E; rejects graphs with phantom edges.
RibbonGraph geometric_dual(const RibbonGraph& g);

// Edge removal; later edge indices shift down by one. Arrows are dropped.
RibbonGraph delete_edge(const RibbonGraph& g, int e);
// G/e := (G^{e}) - e.
RibbonGraph contract_edge(const RibbonGraph& g, int e);

enum class EdgeClass { bridge, ordinary, trivial_orientable_loop, nontrivial_orientable_loop, nonorientable_loop };

const char* to_string(EdgeClass c);
EdgeClass classify_edge(const RibbonGraph& g, int e);

// Reverses the rotation of vertex v; non-loop edges at v change twist.
RibbonGraph flip_vertex(const RibbonGraph& g, int v);
// Flips vertices so that every edge of each orientable component is untwisted.
RibbonGraph normalized_orientation(const RibbonGraph& g);

// Connected components as separate graphs; `edge_maps[i][j]` is the index in
// g of edge j of component i.
struct ComponentSplit {
  std::vector<RibbonGraph> parts;
  std::vector<std::vector<int>> edge_maps;
};
ComponentSplit split_components(const RibbonGraph& g);

// Disjoint union; names of the second graph get `suffix` appended when they
// collide.
RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b, const std::string& suffix = "'");

// Isomorphism-invariant encoding (relabelings and vertex flips). With
// `labeled`, edge indices and attributes must match as well. Limited to
// graphs with at most 12 edges.
using CanonicalCode = std::vector<long long>;
inline constexpr int kCanonicalFormMaxEdges = 12;
CanonicalCode canonical_form(const RibbonGraph& g, bool labeled = false);
bool isomorphic(const RibbonGraph& a, const RibbonGraph& b, bool labeled = false);

}  // namespace topotutte
