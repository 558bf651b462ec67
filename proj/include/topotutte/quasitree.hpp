#pragma once

// Spanning quasi-trees, their chord diagrams with live/dead and
// orientable/non-orientable activities, and the quasi-tree expansion of the
// Krushkal polynomial.

#include "topotutte/expansions.hpp"
#include "topotutte/ribbon_graph.hpp"
#include "topotutte/tutte.hpp"

#include <vector>

namespace topotutte {

// A total order on edges, smallest first: order[i] is the edge of rank i.
// An empty order means edge-index order.
using EdgeOrder = std::vector<int>;

// Rank of every edge under `order`; validates that it is a permutation.
std::vector<int> edge_ranks(const EdgeOrder& order, int num_edges);

// All F with bc(F) = 1, by size and then lexicographically.
std::vector<EdgeSet> quasi_trees(const RibbonGraph& g, const EnumerationOptions& opts = {});

struct Chord {
  std::array<int, 2> positions{};
  bool internal = false;
  bool orientable = true;
  bool live = false;

  friend bool operator==(const Chord&, const Chord&) = default;
};

struct ChordDiagram {
  std::vector<int> marks;     // edge index at each position around the circle
  std::vector<Chord> chords;  // indexed by edge

  bool crossing(int e, int f) const;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

// Chord diagram read off the boundary walk of Q. Throws GraphError when Q is
// not a quasi-tree.
ChordDiagram chord_diagram(const RibbonGraph& g, EdgeSet q, const EdgeOrder& order = {});
// The same diagram read from the single vertex of the partial dual G^Q; loops
// there are orientable exactly when untwisted.
ChordDiagram chord_diagram_via_partial_dual(const RibbonGraph& g, EdgeSet q, const EdgeOrder& order = {});

struct DualQuasiTree {
  RibbonGraph dual;
  EdgeSet q_star;
};
DualQuasiTree dual_quasitree(const RibbonGraph& g, EdgeSet q);

struct ButlerTerm {
  EdgeSet q;
  ChordDiagram diagram;
  EdgeSet f_q;          // edges of F(Q) in G
  AbstractGraph gamma_q;
  EdgeSet f_q_star;     // edges of F(Q*) in G*
  AbstractGraph gamma_q_star;
  Poly contribution;
};

// Requires G connected (quasi-trees exist only then).
ButlerTerm butler_term(const RibbonGraph& g, EdgeSet q, const EdgeOrder& order = {});
std::vector<ButlerTerm> butler_terms(const RibbonGraph& g, const EdgeOrder& order = {},
                                     const EnumerationOptions& opts = {});

// Sum of Butler terms, taken per connected component and multiplied.
Poly krushkal_via_quasitrees(const RibbonGraph& g, const EdgeOrder& order = {}, const EnumerationOptions& opts = {});

}  // namespace topotutte
