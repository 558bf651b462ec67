#pragma once

// Classical Tutte and dichromatic polynomials of abstract multigraphs, rank
// oracles, and the three-variable Tutte polynomial of a matroid perspective.

#include "topotutte/polynomial.hpp"
#include "topotutte/ribbon_graph.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace topotutte {

// A multigraph without an embedding. Loops and parallel edges are allowed.
struct AbstractGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  AbstractGraph() = default;
  AbstractGraph(int n, std::vector<std::pair<int, int>> e);  // validates endpoints

  int num_edges() const { return static_cast<int>(edges.size()); }
};

// The underlying graph of the spanning subgraph (V, F); edge j of the result
// is the j-th edge of F in index order.
AbstractGraph underlying_graph(const RibbonGraph& g, EdgeSet f);
inline AbstractGraph underlying_graph(const RibbonGraph& g) { return underlying_graph(g, g.all_edges()); }

int count_components(const AbstractGraph& g, EdgeSet f);
inline int count_components(const AbstractGraph& g) { return count_components(g, EdgeSet::all(g.num_edges())); }

// T(G; x, y) in the variables x and y, by memoized deletion-contraction.
Poly tutte(const AbstractGraph& g);
Poly tutte(const AbstractGraph& g, Var x, Var y);

// Z(a, b) = sum_F a^k(F) b^|F|.
Poly dichromatic(const AbstractGraph& g, Var a = Var("a"), Var b = Var("b"));
// Z(a, b_e) = sum_F a^k(F) prod_{e in F} b_e.
Poly dichromatic(const AbstractGraph& g, const std::vector<Poly>& b, Var a = Var("a"));

// log2 |T(G; -1, -1)| + k(G), the medial circle count of any plane
// embedding (the +1 of the connected case, once per component). Throws std::logic_error when |T(-1,-1)| is not a
// power of two.
int delta(const AbstractGraph& g);

// A matroid given by its rank function on subsets of {0, ..., size-1}.
struct RankOracle {
  int size = 0;
  std::function<int(EdgeSet)> rank;

  int operator()(EdgeSet f) const { return rank(f); }
  EdgeSet ground() const { return EdgeSet::all(size); }
};

// r(F) = v - k(V, F).
int cycle_rank(const AbstractGraph& g, EdgeSet f);
RankOracle cycle_rank(const AbstractGraph& g);
// r*(F) = |F| + r(E \ F) - r(E).
RankOracle dual_rank(RankOracle base);

// T_{M -> M'}(x, y, z) = sum_F (x-1)^{r'(E)-r'(F)} (y-1)^{n_M(F)}
//                              z^{(r(E)-r(F)) - (r'(E)-r'(F))}.
// Throws std::invalid_argument when r(F) < r'(F) for some F or a z exponent
// would be negative (not a perspective).
Poly perspective_tutte(const RankOracle& m, const RankOracle& m_prime);

}  // namespace topotutte
